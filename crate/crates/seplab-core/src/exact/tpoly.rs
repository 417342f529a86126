//! Dense univariate polynomials over the rationals in the infinitesimal
//! parameter `t`. Also reused for the residue-variable polynomials that show
//! up when reading signs off a divisorial point.

use super::rat::{rat_to_string, sign_of, Rat};
use super::value::Value;
use num_traits::Zero;

/// Coefficient list indexed by exponent; the top coefficient is nonzero
/// unless the polynomial is zero (empty list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<Rat>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(Rat::from_integer(1.into()))
    }

    pub fn constant(c: Rat) -> Self {
        TPoly::from_coeffs(vec![c])
    }

    /// c * t^k
    pub fn term(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        TPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Least exponent with nonzero coefficient; `Inf` for the zero polynomial.
    pub fn ord(&self) -> Value {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Value::Fin(k as i64),
            None => Value::Inf,
        }
    }

    /// Sign of the lowest-order nonzero coefficient (the sign near 0+).
    pub fn sign_near_zero(&self) -> i32 {
        match self.ord() {
            Value::Fin(k) => sign_of(&self.coeffs[k as usize]),
            Value::Inf => 0,
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        TPoly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division; panics if the remainder is nonzero (internal use only,
    /// callers guarantee divisibility).
    pub fn div_exact(&self, den: &Self) -> Self {
        let (q, r) = self.div_rem(den);
        assert!(r.is_zero(), "inexact division of t-polynomials");
        q
    }

    pub fn div_rem(&self, den: &Self) -> (Self, Self) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dd = den.deg().unwrap();
        let dl = den.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (TPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &dl;
            quo[i - dd] = q.clone();
            for (j, c) in den.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                let sub = c * &q;
                rem[idx] -= sub;
            }
        }
        (TPoly::from_coeffs(quo), TPoly::from_coeffs(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff().unwrap().clone();
        a.scale(&(Rat::from_integer(1.into()) / lead))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients of p(q + delta) as a polynomial in delta (Taylor shift).
    pub fn taylor_at(&self, q: &Rat) -> TPoly {
        // Repeated synthetic division by (t - q).
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = vec![Rat::zero(); n];
        for k in 0..n {
            // Divide work by (t - q); the remainder is the next coefficient.
            let mut rem = Rat::zero();
            for i in (0..n - k).rev() {
                let cur = work[i].clone() + &rem * q;
                rem = cur.clone();
                work[i] = cur;
            }
            // After the pass, work[0] is p(q) of the current quotient chain.
            out[k] = work[0].clone();
            work.remove(0);
            work.push(Rat::zero());
        }
        TPoly::from_coeffs(out)
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let neg = sign_of(c) < 0;
            if first {
                if neg {
                    s.push('-');
                }
                first = false;
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_str = rat_to_string(&mag);
            if k == 0 {
                s.push_str(&coeff_str);
            } else {
                let var_str = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if coeff_str == "1" {
                    s.push_str(&var_str);
                } else {
                    s.push_str(&coeff_str);
                    s.push('*');
                    s.push_str(&var_str);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_i};

    fn tp(coeffs: &[i64]) -> TPoly {
        TPoly::from_coeffs(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn ord_examples() {
        // t^4 + 2 t^5
        let p = tp(&[0, 0, 0, 0, 1, 2]);
        assert_eq!(p.ord(), Value::Fin(4));
        assert_eq!(TPoly::zero().ord(), Value::Inf);
        assert_eq!(tp(&[7]).ord(), Value::Fin(0));
    }

    #[test]
    fn taylor_shift() {
        // p = t^2 - 1 at q = 2: (delta+2)^2 - 1 = 3 + 4 delta + delta^2
        let p = tp(&[-1, 0, 1]);
        let sh = p.taylor_at(&rat_i(2));
        assert_eq!(sh, tp(&[3, 4, 1]));
    }

    #[test]
    fn div_and_gcd() {
        let a = tp(&[0, 0, 1, 1]); // t^2(1+t)
        let b = tp(&[0, 1, 1]); // t(1+t)
        let g = a.gcd(&b);
        assert_eq!(g, tp(&[0, 1, 1])); // monic t + t^2
        assert_eq!(a.div_exact(&g), tp(&[0, 1]));
    }

    #[test]
    fn render_matches_convention() {
        let p = tp(&[0, 0, 0, 0, 1, 2]);
        assert_eq!(p.render("t"), "t^4 + 2*t^5");
        let q = TPoly::from_coeffs(vec![rat_i(0), rat(1, 2)]);
        assert_eq!(q.render("t"), "1/2*t");
        assert_eq!(tp(&[0, 0, 0, 0, 0, -1, 1]).render("t"), "-t^5 + t^6");
    }
}

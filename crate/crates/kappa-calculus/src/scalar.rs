//! Exact scalar coefficients: Laurent polynomials in the deformation
//! parameter `λ = 1/κ` with Gaussian-rational coefficients.
//!
//! `κ` is treated as a formal symbol, never a number, so every identity the
//! rest of the crate verifies holds exactly in the ring
//! `Q(i)[λ, λ⁻¹]`. The canonical representation maps each λ-exponent to a
//! nonzero coefficient; all constructors and operations strip zeros.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A complex rational `re + im·i` with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianRational { re: BigRational::one(), im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`.
    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Exact multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussianRational { re: &self.re / &norm, im: -&self.im / &norm }
    }

    fn mul_gr(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        self.mul_gr(rhs)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

/// A Laurent polynomial `Σ c_k λ^k` with `c_k ∈ Q(i)`, `k ∈ Z`.
///
/// The map holds only nonzero coefficients, so structural equality is
/// semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<i64, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussianRational::one())
    }

    /// The imaginary unit as a scalar.
    pub fn i() -> Self {
        Scalar::constant(GaussianRational::i())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::constant(GaussianRational::from_integer(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::constant(GaussianRational::from_ratio(num, den))
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        Scalar { terms }
    }

    /// `λ^k` (so `lambda_pow(1)` is `1/κ` and `lambda_pow(-1)` is `κ`).
    pub fn lambda_pow(k: i64) -> Self {
        Scalar::term(k, GaussianRational::one())
    }

    /// `c·λ^k`.
    pub fn term(k: i64, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Scalar { terms }
    }

    /// `i·λ`, the structure constant of the coordinate commutation rules.
    pub fn i_lambda() -> Self {
        Scalar::term(1, GaussianRational::i())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&0).map_or(false, |c| c.re.is_one() && c.im.is_zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &GaussianRational)> {
        self.terms.iter()
    }

    /// Smallest λ-exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest λ-exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn insert_add(&mut self, k: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Complex conjugation, extended coefficient-wise (`λ` is real: `κ > 0`).
    pub fn conj(&self) -> Self {
        Scalar { terms: self.terms.iter().map(|(k, c)| (*k, c.conj())).collect() }
    }

    /// Exact division; `None` when `other` does not divide `self` in
    /// `Q(i)[λ, λ⁻¹]`. Division by a monomial always succeeds.
    pub fn div_exact(&self, other: &Scalar) -> Option<Scalar> {
        assert!(!other.is_zero(), "division by zero scalar");
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        // Work with the polynomial parts shifted to exponent zero.
        let a_min = self.min_exp().unwrap();
        let b_min = other.min_exp().unwrap();
        let mut rem: BTreeMap<i64, GaussianRational> =
            self.terms.iter().map(|(k, c)| (k - a_min, c.clone())).collect();
        let b: BTreeMap<i64, GaussianRational> =
            other.terms.iter().map(|(k, c)| (k - b_min, c.clone())).collect();
        let b_deg = *b.keys().next_back().unwrap();
        let b_lead = b.get(&b_deg).unwrap().clone();
        let b_lead_inv = b_lead.inv();
        let mut quot: BTreeMap<i64, GaussianRational> = BTreeMap::new();
        while let Some((&r_deg, _)) = rem.iter().next_back() {
            if r_deg < b_deg {
                return None; // nonzero remainder of lower degree
            }
            let r_lead = rem.get(&r_deg).unwrap().clone();
            let q = r_lead.mul_gr(&b_lead_inv);
            let shift = r_deg - b_deg;
            for (k, c) in &b {
                let sub = q.mul_gr(c);
                let entry = rem.entry(k + shift).or_insert_with(GaussianRational::zero);
                *entry = &*entry - &sub;
                if entry.is_zero() {
                    rem.remove(&(k + shift));
                }
            }
            quot.insert(shift, q);
        }
        let offset = a_min - b_min;
        Some(Scalar { terms: quot.into_iter().map(|(k, c)| (k + offset, c)).collect() })
    }

    /// Monic greatest common divisor, used for content removal in exact
    /// elimination. The result is normalized to leading coefficient 1 and
    /// lowest exponent 0, and divides both inputs exactly.
    pub fn gcd(a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() {
            return b.monic_shifted();
        }
        if b.is_zero() {
            return a.monic_shifted();
        }
        let mut x = a.monic_shifted();
        let mut y = b.monic_shifted();
        // Euclid on ordinary polynomials (both now have min_exp == 0).
        while !y.is_zero() {
            let r = x.poly_rem(&y);
            x = y;
            y = r.monic_shifted();
        }
        x.monic_shifted()
    }

    /// Shift to lowest exponent 0 and divide by the leading coefficient.
    fn monic_shifted(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        let min = self.min_exp().unwrap();
        let lead = self.terms.values().next_back().unwrap().inv();
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (k - min, c.mul_gr(&lead))).collect(),
        }
    }

    /// Remainder of polynomial division (assumes both have min_exp ≥ 0).
    fn poly_rem(&self, b: &Scalar) -> Scalar {
        let b_deg = b.max_exp().unwrap();
        let b_lead_inv = b.terms.get(&b_deg).unwrap().inv();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.max_exp() {
            if r_deg < b_deg {
                break;
            }
            let q = rem.terms.get(&r_deg).unwrap().mul_gr(&b_lead_inv);
            let shift = r_deg - b_deg;
            for (k, c) in &b.terms {
                rem.insert_add(k + shift, -&q.mul_gr(c));
            }
        }
        rem
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.insert_add(*k, c.clone());
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c);
        }
        out
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (k, c) in &rhs.terms {
            self.insert_add(*k, -c);
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.insert_add(ka + kb, ca.mul_gr(cb));
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render one Gaussian rational as a product-of-atoms string (`i`, `p/q`,
/// `p/q*i`, `(a+b*i)`), valid input for the expression grammar.
fn fmt_gaussian(c: &GaussianRational) -> String {
    if c.im.is_zero() {
        return fmt_rational(&c.re);
    }
    if c.re.is_zero() {
        return if c.im.is_one() {
            "i".to_string()
        } else if (-&c.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(&c.im))
        };
    }
    let im_part = if c.im.is_one() {
        "i".to_string()
    } else if (-&c.im).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", fmt_rational(&c.im))
    };
    if c.im.is_negative() {
        format!("({}{})", fmt_rational(&c.re), im_part.replacen('-', " - ", 1))
    } else {
        format!("({} + {})", fmt_rational(&c.re), im_part)
    }
}

impl Scalar {
    /// λ-power atom per the expression grammar: `λ^m` prints as `k^-m`.
    fn fmt_lambda(k: i64) -> String {
        format!("k^{}", -k)
    }

    /// Terms of the printed form, exponent ascending, each `(sign, body)`.
    pub(crate) fn display_terms(&self) -> Vec<(bool, String)> {
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            let negative = c.re.is_negative() || (c.re.is_zero() && c.im.is_negative());
            let c_abs = if negative { -c } else { c.clone() };
            let coeff = fmt_gaussian(&c_abs);
            let body = if *k == 0 {
                coeff
            } else if c_abs.re.is_one() && c_abs.im.is_zero() {
                Self::fmt_lambda(*k)
            } else {
                format!("{}*{}", coeff, Self::fmt_lambda(*k))
            };
            out.push((negative, body));
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (neg, body)) in self.display_terms().into_iter().enumerate() {
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn il() -> Scalar {
        Scalar::i_lambda()
    }

    #[test]
    fn additive_cancellation() {
        let sum = &il() + &-&il();
        assert!(sum.is_zero());
    }

    #[test]
    fn product_of_i_lambda_with_conjugate() {
        // (i·λ)·(−i·λ) = λ²
        let p = &il() * &-&il();
        assert_eq!(p, Scalar::lambda_pow(2));
    }

    #[test]
    fn conjugation_flips_i() {
        assert_eq!(il().conj(), -&il());
        let c = &Scalar::from_ratio(3, 2) + &Scalar::i();
        assert_eq!(c.conj(), &Scalar::from_ratio(3, 2) - &Scalar::i());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_integer(-1));
    }

    #[test]
    fn mixed_laurent_product() {
        // (1 + i·λ)(1 − i·λ) = 1 + λ²
        let a = &Scalar::one() + &il();
        let b = &Scalar::one() - &il();
        assert_eq!(&a * &b, &Scalar::one() + &Scalar::lambda_pow(2));
    }

    #[test]
    fn exact_division() {
        let a = &Scalar::one() + &Scalar::lambda_pow(2); // 1 + λ²
        let prod = &a * &il();
        assert_eq!(prod.div_exact(&il()).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), il());
        // λ is a unit of the Laurent ring, so dividing by it always succeeds…
        assert_eq!(
            a.div_exact(&Scalar::lambda_pow(1)).unwrap(),
            &Scalar::lambda_pow(-1) + &Scalar::lambda_pow(1)
        );
        // …but 1 + λ does not divide 1 + λ².
        let one_plus = &Scalar::one() + &Scalar::lambda_pow(1);
        assert!(a.div_exact(&one_plus).is_none());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = &Scalar::one() + &Scalar::lambda_pow(1);
        let a = &f * &Scalar::lambda_pow(2);
        let b = &f * &(&Scalar::one() - &Scalar::lambda_pow(1));
        let g = Scalar::gcd(&a, &b);
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
        assert_eq!(g, f.monic_shifted());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(il().to_string(), "i*k^-1");
        assert_eq!((-&il()).to_string(), "-i*k^-1");
        assert_eq!(Scalar::from_ratio(1, 2).to_string(), "1/2");
        assert_eq!(Scalar::lambda_pow(-1).to_string(), "k^1");
        let s = &Scalar::one() + &(&Scalar::from_integer(2) * &il());
        assert_eq!(s.to_string(), "1 + 2*i*k^-1");
    }
}

//! The deformed Minkowski coordinate algebra.
//!
//! Generators `x0 … x{n-1}` with `[x0, xj] = (i/κ)·xj` and commuting spatial
//! coordinates; normal words carry nondecreasing indices. The Hopf structure
//! is primitive on generators and every coordinate is hermitian.

use crate::engine::{Element, EngineError, Presentation, RawSum};
use crate::report::Check;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

/// A diagonal metric with entries ±1; index 0 plays the distinguished
/// (timelike) role in all commutation relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    signs: Vec<i8>,
}

impl Metric {
    /// `+---…`: one plus, the rest minus.
    pub fn mostly_minus(n: usize) -> Metric {
        let mut signs = vec![-1i8; n];
        if n > 0 {
            signs[0] = 1;
        }
        Metric { signs }
    }

    /// Parse a signature string such as `+---` (one sign per dimension).
    pub fn parse(s: &str) -> Result<Metric, EngineError> {
        let mut signs = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                _ => return Err(EngineError::BadSignature),
            }
        }
        if signs.len() < 2 {
            return Err(EngineError::DimensionTooSmall(signs.len()));
        }
        Ok(Metric { signs })
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    /// The diagonal entry `g_{μμ} = g^{μμ} ∈ {+1, −1}`.
    pub fn sign(&self, mu: usize) -> i64 {
        self.signs[mu] as i64
    }

    pub fn scalar(&self, mu: usize) -> Scalar {
        Scalar::from_integer(self.sign(mu))
    }

    /// Kronecker delta as a scalar, for assembling structure constants.
    pub fn delta(mu: usize, nu: usize) -> Scalar {
        if mu == nu {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", if *s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// The coordinate algebra in `n` dimensions.
#[derive(Clone)]
pub struct Minkowski {
    pres: Arc<Presentation>,
    metric: Metric,
}

impl Minkowski {
    pub fn new(metric: Metric) -> Result<Minkowski, EngineError> {
        let n = metric.dim();
        if n < 2 {
            return Err(EngineError::DimensionTooSmall(n));
        }
        let mut b = Presentation::builder(format!("coords-{}-{}", n, metric));
        let gens: Vec<_> = (0..n).map(|mu| b.generator(format!("x{}", mu))).collect();
        for j in 1..n {
            // xj·x0 → x0·xj − (i/κ)·xj
            b.swap_rule(gens[j], gens[0], vec![(vec![gens[j]], -&Scalar::i_lambda())]);
            for k in 1..j {
                b.swap_rule(gens[j], gens[k], vec![]);
            }
        }
        Ok(Minkowski { pres: b.build(), metric })
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn x(&self, mu: usize) -> Element {
        assert!(mu < self.dim(), "coordinate index out of range");
        Element::generator(&self.pres, mu as u16)
    }

    pub fn unit(&self) -> Element {
        Element::unit(&self.pres)
    }

    pub fn zero(&self) -> Element {
        Element::zero(&self.pres)
    }

    /// The defining commutators as formal sums that the rewrite system must
    /// kill: `x^μ x^ν − x^ν x^μ − [x^μ, x^ν]` for all μ < ν.
    pub fn defining_relations(&self) -> Vec<(String, RawSum)> {
        let n = self.dim();
        let mut out = Vec::new();
        for mu in 0..n {
            for nu in mu + 1..n {
                let mut raw: RawSum = vec![
                    (vec![mu as u16, nu as u16], Scalar::one()),
                    (vec![nu as u16, mu as u16], -&Scalar::one()),
                ];
                if mu == 0 {
                    // [x0, xj] = (i/κ)·xj
                    raw.push((vec![nu as u16], -&Scalar::i_lambda()));
                }
                out.push((format!("x{}-x{}", mu, nu), raw));
            }
        }
        out
    }

    /// Every normal word up to the given degree.
    pub fn basis_words(&self, max_degree: usize) -> Vec<Element> {
        self.pres
            .normal_words_up_to(max_degree)
            .into_iter()
            .map(|w| {
                Element::normalize(&self.pres, vec![(w, Scalar::one())])
                    .expect("normal words are valid")
            })
            .collect()
    }

    /// The index-lowered coordinate `x_μ = g_{μμ}·x^μ`.
    pub fn x_lower(&self, mu: usize) -> Element {
        self.x(mu).scale(&self.metric.scalar(mu))
    }

    /// The invariant square `x² = g_{μν} x^μ x^ν`, a signed sum of squares
    /// for the diagonal metric; hermitian because each square is.
    pub fn x_squared(&self) -> Element {
        let mut out = self.zero();
        for mu in 0..self.dim() {
            out = &out + &(&self.x_lower(mu) * &self.x(mu));
        }
        out
    }

    /// The distinguished quadratic element `φ = x² + (i/κ)(n−1)·x⁰`, whose
    /// commutator with every coordinate closes on terms of lower degree.
    pub fn phi(&self) -> Element {
        let n = self.dim() as i64;
        let c = &Scalar::i_lambda() * &Scalar::from_integer(n - 1);
        &self.x_squared() + &self.x(0).scale(&c)
    }

    /// The quadratic combination
    /// `x^{μν} = x^μ x^ν + (i/κ)(g^{μν} x⁰ − g^{0μ} x^ν)`.
    ///
    /// When `g^{00} = +1` this is symmetric in (μ, ν) even though its leading
    /// summand is not: the correction term absorbs the reordering commutator.
    /// Flipping the overall metric sign breaks the symmetry by the explicit
    /// factor `(1 − g^{00})`, so the symmetric combinations are tied to the
    /// timelike normalization.
    pub fn x_munu(&self, mu: usize, nu: usize) -> Element {
        assert!(
            mu < self.dim() && nu < self.dim(),
            "coordinate index out of range"
        );
        let il = Scalar::i_lambda();
        let mut out = &self.x(mu) * &self.x(nu);
        if mu == nu {
            // + (i/κ)·g^{μμ}·x⁰
            out = &out + &self.x(0).scale(&(&il * &self.metric.scalar(mu)));
        }
        if mu == 0 {
            // − (i/κ)·g^{00}·x^ν
            out = &out - &self.x(nu).scale(&(&il * &self.metric.scalar(0)));
        }
        out
    }

    /// Full Hopf-algebra verification on all normal words up to `max_degree`:
    /// the structure maps respect the relations, and coassociativity, the
    /// counit law, the antipode law, (anti)multiplicativity and the
    /// `*`-compatibilities all hold exactly.
    pub fn hopf_suite(&self, max_degree: usize) -> Vec<Check> {
        let mut checks = Vec::new();
        let rels = self.defining_relations();

        let bad: Vec<String> = rels
            .iter()
            .filter(|(_, r)| !Element::coproduct_of_raw(&self.pres, r).is_zero())
            .map(|(n, _)| n.clone())
            .collect();
        checks.push(Check::from_bool(
            "relations-coproduct",
            bad.is_empty(),
            format!("coproduct kills all {} defining commutators", rels.len()),
            format!("coproduct fails on: {}", bad.join(", ")),
        ));

        let bad: Vec<String> = rels
            .iter()
            .filter(|(_, r)| !Element::counit_of_raw(&self.pres, r).is_zero())
            .map(|(n, _)| n.clone())
            .collect();
        checks.push(Check::from_bool(
            "relations-counit",
            bad.is_empty(),
            "counit kills all defining commutators",
            format!("counit fails on: {}", bad.join(", ")),
        ));

        let bad: Vec<String> = rels
            .iter()
            .filter(|(_, r)| !Element::antipode_of_raw(&self.pres, r).is_zero())
            .map(|(n, _)| n.clone())
            .collect();
        checks.push(Check::from_bool(
            "relations-antipode",
            bad.is_empty(),
            "antipode maps every defining commutator to zero",
            format!("antipode fails on: {}", bad.join(", ")),
        ));

        let bad: Vec<String> = rels
            .iter()
            .filter(|(_, r)| !Element::star_of_raw(&self.pres, r).is_zero())
            .map(|(n, _)| n.clone())
            .collect();
        checks.push(Check::from_bool(
            "relations-star",
            bad.is_empty(),
            "the *-involution maps every defining commutator to zero",
            format!("star fails on: {}", bad.join(", ")),
        ));

        let words = self.basis_words(max_degree);
        let word_count = words.len();

        let mut coassoc = true;
        let mut counit_law = true;
        let mut antipode_law = true;
        let mut star_inv = true;
        let mut antipode_inv = true;
        let mut star_antipode = true;
        let mut coproduct_star = true;
        for w in &words {
            let d = w.coproduct();
            let left = d.expand_factor(0, |e| e.coproduct());
            let right = d.expand_factor(1, |e| e.coproduct());
            coassoc &= left == right;

            counit_law &= d.collapse_to_element(0, |e| e.counit()) == *w
                && d.collapse_to_element(1, |e| e.counit()) == *w;

            let eps = self.unit().scale(&w.counit());
            let s_left = d
                .map_factor(0, &self.pres, |e| e.antipode())
                .collapse_mul_to_element();
            let s_right = d
                .map_factor(1, &self.pres, |e| e.antipode())
                .collapse_mul_to_element();
            antipode_law &= s_left == eps && s_right == eps;

            star_inv &= w.star().star() == *w;
            antipode_inv &= w.antipode().antipode() == *w;
            // S ∘ * must be an involution in a Hopf *-algebra.
            star_antipode &= w.star().antipode().star().antipode() == *w;
            coproduct_star &= w.star().coproduct() == d.star();
        }
        let on_all = |ok: bool, what: &str| {
            Check::from_bool(
                what,
                ok,
                format!("holds on all {} basis words up to degree {}", word_count, max_degree),
                format!("violated on a basis word of degree ≤ {}", max_degree),
            )
        };
        checks.push(on_all(coassoc, "coassociativity"));
        checks.push(on_all(counit_law, "counit-law"));
        checks.push(on_all(antipode_law, "antipode-law"));
        checks.push(on_all(star_inv, "star-involution"));
        checks.push(on_all(antipode_inv, "antipode-involution"));
        checks.push(on_all(star_antipode, "star-antipode-involution"));
        checks.push(on_all(coproduct_star, "coproduct-star-compatibility"));

        // Multiplicativity of Δ and ε, antimultiplicativity of S and * on all
        // basis pairs whose total degree stays within the bound.
        let mut hom = true;
        let mut pairs = 0usize;
        for u in &words {
            for v in &words {
                let du = u.degree().unwrap_or(0);
                let dv = v.degree().unwrap_or(0);
                if du + dv > max_degree || du == 0 || dv == 0 {
                    continue;
                }
                pairs += 1;
                let uv = u * v;
                hom &= uv.coproduct() == &u.coproduct() * &v.coproduct();
                hom &= uv.counit() == &u.counit() * &v.counit();
                hom &= uv.antipode() == &v.antipode() * &u.antipode();
                hom &= uv.star() == &v.star() * &u.star();
            }
        }
        checks.push(Check::from_bool(
            "structure-maps-on-products",
            hom,
            format!(
                "Δ and ε multiplicative, S and * antimultiplicative on {} basis pairs",
                pairs
            ),
            "a structure map is not (anti)multiplicative",
        ));

        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::TensorElement;

    fn algebra(n: usize) -> Minkowski {
        Minkowski::new(Metric::mostly_minus(n)).unwrap()
    }

    #[test]
    fn normal_ordering_of_the_defining_commutator() {
        // x1·x0 = x0·x1 − (i/κ)·x1
        let m = algebra(2);
        let got = &m.x(1) * &m.x(0);
        let expected = &(&m.x(0) * &m.x(1)) - &m.x(1).scale(&Scalar::i_lambda());
        assert_eq!(got, expected);
        assert_eq!(format!("{}", got), "x0*x1 - i*k^-1*x1");
    }

    #[test]
    fn spatial_coordinates_commute() {
        let m = algebra(3);
        assert_eq!(&m.x(2) * &m.x(1), &m.x(1) * &m.x(2));
    }

    #[test]
    fn commutator_scales_along_longer_words() {
        // [x0, x1²] = 2(i/κ)x1² follows from the Leibniz-like expansion.
        let m = algebra(2);
        let x0 = m.x(0);
        let x1sq = &m.x(1) * &m.x(1);
        let comm = &(&x0 * &x1sq) - &(&x1sq * &x0);
        let expected = x1sq.scale(&(&Scalar::from_integer(2) * &Scalar::i_lambda()));
        assert_eq!(comm, expected);
    }

    #[test]
    fn primitive_coproduct_on_generators() {
        let m = algebra(2);
        let d = m.x(1).coproduct();
        let p = m.presentation().clone();
        let expected = TensorElement::from_raw(
            vec![p.clone(), p],
            vec![
                (vec![vec![1], vec![]], Scalar::one()),
                (vec![vec![], vec![1]], Scalar::one()),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn antipode_negates_generators() {
        let m = algebra(3);
        for mu in 0..3 {
            assert_eq!(m.x(mu).antipode(), -&m.x(mu));
        }
    }

    #[test]
    fn coordinates_are_hermitian_but_products_reverse() {
        let m = algebra(2);
        assert_eq!(m.x(0).star(), m.x(0));
        let prod = &m.x(0) * &m.x(1);
        // (x0·x1)* = x1*·x0* = x1·x0 = x0·x1 − (i/κ)x1
        let expected = &prod - &m.x(1).scale(&Scalar::i_lambda());
        assert_eq!(prod.star(), expected);
    }

    #[test]
    fn hopf_suite_passes_in_low_dimension() {
        let m = algebra(2);
        for c in m.hopf_suite(2) {
            assert_eq!(c.status, crate::report::CheckStatus::Pass, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn metric_roundtrip_and_bounds() {
        let g = Metric::parse("+--").unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.sign(0), 1);
        assert_eq!(g.sign(2), -1);
        assert_eq!(format!("{}", g), "+--");
        assert!(Metric::parse("+*-").is_err());
        assert!(Metric::parse("+").is_err());
        assert!(Minkowski::new(Metric::mostly_minus(1)).is_err());
    }

    #[test]
    fn invariant_square_in_two_dimensions() {
        let m = algebra(2);
        let expected = &(&m.x(0) * &m.x(0)) - &(&m.x(1) * &m.x(1));
        assert_eq!(m.x_squared(), expected);
        assert_eq!(format!("{}", m.x_squared()), "x0^2 - x1^2");
        // Hermitian exactly, under either overall sign.
        assert_eq!(m.x_squared().star(), m.x_squared());
        let flipped = Minkowski::new(Metric::parse("-++").unwrap()).unwrap();
        assert_eq!(flipped.x_squared().star(), flipped.x_squared());
    }

    #[test]
    fn phi_value_counit_and_star() {
        let m = algebra(2);
        let expected = &m.x_squared() + &m.x(0).scale(&Scalar::i_lambda());
        assert_eq!(m.phi(), expected);
        assert_eq!(format!("{}", m.phi()), "x0^2 - x1^2 + i*k^-1*x0");
        assert!(m.phi().counit().is_zero());

        // φ* = φ − 2(i/κ)(n−1)x⁰ in any dimension.
        for n in 2..=4usize {
            let m = algebra(n);
            let shift = &Scalar::from_integer(2 * (n as i64 - 1)) * &Scalar::i_lambda();
            assert_eq!(m.phi().star(), &m.phi() - &m.x(0).scale(&shift));
        }
    }

    #[test]
    fn phi_commutators_close_on_lower_degree() {
        // [φ, x⁰] = −2(i/κ)·Σ_j g_{jj} x^j x^j and
        // [φ, x^k] = 2(i/κ)·g^{00} x⁰x^k + κ^{-2}(g^{00} − (n−1)) x^k,
        // for any diagonal metric.
        for sig in ["+--", "-++", "+++", "+-+"] {
            let m = Minkowski::new(Metric::parse(sig).unwrap()).unwrap();
            let n = m.dim();
            let il = Scalar::i_lambda();
            let lam2 = -&(&il * &il);

            let phi = m.phi();
            let comm0 = &(&phi * &m.x(0)) - &(&m.x(0) * &phi);
            let mut expected0 = m.zero();
            for j in 1..n {
                let c = &(&Scalar::from_integer(-2) * &il) * &m.metric().scalar(j);
                expected0 = &expected0 + &(&m.x(j) * &m.x(j)).scale(&c);
            }
            assert_eq!(comm0, expected0, "[phi, x0] under {}", sig);

            for k in 1..n {
                let comm = &(&phi * &m.x(k)) - &(&m.x(k) * &phi);
                let quad = (&m.x(0) * &m.x(k))
                    .scale(&(&(&Scalar::from_integer(2) * &il) * &m.metric().scalar(0)));
                let lin_c = &lam2
                    * &(&m.metric().scalar(0) - &Scalar::from_integer(n as i64 - 1));
                let expected = &quad + &m.x(k).scale(&lin_c);
                assert_eq!(comm, expected, "[phi, x{}] under {}", k, sig);
            }
        }
    }

    #[test]
    fn quadratic_combinations_are_symmetric() {
        for n in 2..=4usize {
            let m = algebra(n);
            for mu in 0..n {
                for nu in 0..n {
                    assert!(
                        (&m.x_munu(mu, nu) - &m.x_munu(nu, mu)).is_zero(),
                        "asymmetry at ({}, {}) n={}",
                        mu,
                        nu,
                        n,
                    );
                    assert!(m.x_munu(mu, nu).counit().is_zero());
                }
            }
            // The (0,0) entry has cancelling corrections.
            assert_eq!(m.x_munu(0, 0), &m.x(0) * &m.x(0));
        }
    }

    #[test]
    fn quadratic_combination_asymmetry_under_flipped_time_sign() {
        // With g^{00} = −1 the (0, j) symmetry breaks by exactly
        // (i/κ)(1 − g^{00})·x^j = 2(i/κ)x^j.
        let m = Minkowski::new(Metric::parse("-++").unwrap()).unwrap();
        let gap = &m.x_munu(0, 1) - &m.x_munu(1, 0);
        let expected = m.x(1).scale(&(&Scalar::from_integer(2) * &Scalar::i_lambda()));
        assert_eq!(gap, expected);
    }
}

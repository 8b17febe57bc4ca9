//! Degree-truncated experiments on right ideals of the deformed coordinate
//! algebra that sit inside the counit kernel.
//!
//! The differential calculi on the coordinate algebra correspond to right
//! ideals R of ker(counit) that are stable under the symmetry coaction. This
//! module provides the laboratory tools for exploring such ideals at a fixed
//! truncation degree:
//!
//! * graded bases of normal words (with the expected monomial counts),
//! * the distinguished quadratic family x{mu,nu} and its traceless part,
//! * exact row-reduced spans of truncated right ideals,
//! * a covariance closure that iterates "coact, decompose, harvest new
//!   members" to a fixpoint,
//! * quotient dimensions dim ker(counit) - dim R with explicit
//!   representatives, and
//! * the stability of the traceless ideal under a |-> star(antipode(a)).
//!
//! The covariance closure formalizes "symmetry forces new members" as
//! follows. For a generator g, lift the universal derivative class omega(g)
//! through the left coaction; the result lives in P (x) M (x) M. Reduce the
//! P leg to a canonical monomial form modulo the orthogonality ideal, then
//! rewrite the M (x) M part over the free left-module coordinates: each
//! u (x) v splits as sum of u*v1 (x) proj(v2) where proj kills the counit
//! component. Grouping by (P monomial, left-module coordinate) yields
//! counit-kernel slices; the ideal is covariance-stable precisely when every
//! slice already lies in its truncated span, and any slice that does not is
//! harvested as a new generator.
use crate::coaction::Coaction;
use crate::engine::{
    ideals_contain, Element, EngineError, LinVec, RawSum, Side, SpanBasis, Word,
};
use crate::minkowski::{Metric, Minkowski};
use crate::poincare::Poincare;
use crate::report::Check;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Maximum number of closure rounds before reporting divergence.
const CLOSURE_ROUND_CAP: usize = 16;

/// The normal words of one fixed total degree.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub degree: usize,
    pub words: Vec<Element>,
}

/// Dimension bookkeeping for ker(counit) modulo a truncated right ideal.
#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub truncation_degree: usize,
    /// dim of ker(counit) truncated to degrees 1..=truncation_degree.
    pub kernel_dim: usize,
    /// rank of the truncated right-ideal span.
    pub ideal_dim: usize,
    /// kernel_dim - ideal_dim, realized by `representatives`.
    pub quotient_dim: usize,
    /// Elements whose classes form a basis of the quotient.
    pub representatives: Vec<Element>,
}

/// Number of degree-`degree` normal words in `dim` letters:
/// binomial(degree + dim - 1, degree).
pub fn monomial_count(dim: usize, degree: usize) -> usize {
    num_integer::binomial((degree + dim - 1) as u128, degree as u128) as usize
}

/// Laboratory for truncated covariant right ideals in the counit kernel.
pub struct IdealLab {
    coact: Coaction,
}

impl IdealLab {
    /// Any diagonal signature is accepted; the classification experiments do
    /// not require a distinguished time sign.
    pub fn new(metric: Metric) -> Result<IdealLab, EngineError> {
        Ok(IdealLab { coact: Coaction::new(metric)? })
    }

    pub fn dim(&self) -> usize {
        self.coact.dim()
    }

    pub fn mink(&self) -> &Minkowski {
        self.coact.mink()
    }

    pub fn poin(&self) -> &Poincare {
        self.coact.poin()
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coact
    }

    /// All normal words of exactly the given total degree, as elements.
    pub fn graded_basis(&self, degree: usize) -> GradedBasis {
        let pres = self.mink().presentation();
        let words = pres
            .normal_words(degree)
            .into_iter()
            .map(|w| {
                Element::normalize(pres, vec![(w, Scalar::one())])
                    .expect("normal words are valid")
            })
            .collect();
        GradedBasis { degree, words }
    }

    /// The distinguished quadratic combination x{mu,nu}; see
    /// `Minkowski::x_munu`.
    pub fn x_munu(&self, mu: usize, nu: usize) -> Element {
        self.mink().x_munu(mu, nu)
    }

    /// The n^2 generators x{mu,nu} - (1/n) g^{mu nu} phi, listed row-major.
    /// Their g-weighted trace vanishes identically and each lies in
    /// ker(counit).
    pub fn traceless_generators(&self) -> Vec<Element> {
        let n = self.dim();
        let m = self.mink();
        let phi = m.phi();
        let inv_n = Scalar::from_ratio(1, n as i64);
        let mut out = Vec::with_capacity(n * n);
        for mu in 0..n {
            for nu in 0..n {
                let mut e = m.x_munu(mu, nu);
                if mu == nu {
                    // The metric is diagonal, so g^{mu nu} vanishes off the
                    // diagonal and equals the sign g_{mu mu} on it.
                    let w = &inv_n * &m.metric().scalar(mu);
                    e = &e - &phi.scale(&w);
                }
                out.push(e);
            }
        }
        out
    }

    /// Exact row-reduced basis of span{g * m : g in gens, m a normal word}
    /// truncated at total degree `max_degree`.
    pub fn right_ideal_span(&self, gens: &[Element], max_degree: usize) -> SpanBasis {
        SpanBasis::build(self.mink().presentation(), gens, Side::Right, max_degree)
    }

    /// Counit-kernel slices of the lifted coaction of omega(g): the elements
    /// that must lie in the ideal for it to be covariance-stable at g.
    fn coacted_slices(
        &self,
        g: &Element,
        ortho: &SpanBasis,
    ) -> Result<Vec<Element>, EngineError> {
        let lifted = self.coact.lift_rho_l(&self.coact.omega(g)?);
        let reduced = lifted
            .map_factor(0, self.poin().presentation(), |e| ortho.reduce_element(e));
        // Split the last leg v into v1 (x) v2 and fold v1 into the
        // left-module coordinate: u (x) v becomes sum of u*v1 (x) v2.
        let sliced = reduced.expand_factor(2, |e| e.coproduct()).collapse_mul(1);
        let pres = self.mink().presentation();
        let mut groups: BTreeMap<(Word, Word), RawSum> = BTreeMap::new();
        for (legs, c) in sliced.terms() {
            if legs[2].is_empty() {
                // Counit component of the slice leg: projected away.
                continue;
            }
            groups
                .entry((legs[0].clone(), legs[1].clone()))
                .or_default()
                .push((legs[2].clone(), c.clone()));
        }
        let mut slices = Vec::new();
        for raw in groups.into_values() {
            let e = Element::normalize(pres, raw)?;
            if !e.is_zero() {
                slices.push(e);
            }
        }
        Ok(slices)
    }

    /// Smallest covariance-stable superset of `gens`, computed by harvesting
    /// coaction slices until the truncated span stops growing. Requires
    /// every generator to lie in ker(counit); reports divergence if the
    /// fixpoint is not reached within the round cap.
    pub fn covariant_closure(
        &self,
        gens: &[Element],
        max_degree: usize,
    ) -> Result<Vec<Element>, EngineError> {
        for g in gens {
            if !g.counit().is_zero() {
                return Err(EngineError::NotInCounitKernel);
            }
        }
        let mut closure: Vec<Element> =
            gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if closure.is_empty() {
            return Ok(closure);
        }
        let gen_degree =
            closure.iter().filter_map(Element::degree).max().unwrap_or(0);
        // A span truncated below the generator degrees can never absorb the
        // harvested slices, so the iteration could not terminate honestly.
        if gen_degree > max_degree {
            return Err(EngineError::TruncationBelowGenerators {
                degree: max_degree,
                need: gen_degree,
            });
        }
        // Slice degrees never exceed the generator degrees, so one
        // orthogonality truncation serves every round.
        let ortho = self.poin().ortho_span(gen_degree.max(2));
        let mut span = self.right_ideal_span(&closure, max_degree);
        let mut frontier = closure.clone();
        for _ in 0..CLOSURE_ROUND_CAP {
            let mut added: Vec<Element> = Vec::new();
            for g in &frontier {
                for slice in self.coacted_slices(g, &ortho)? {
                    if !span.contains(&slice) {
                        closure.push(slice.clone());
                        span = self.right_ideal_span(&closure, max_degree);
                        added.push(slice);
                    }
                }
            }
            if added.is_empty() {
                return Ok(closure);
            }
            frontier = added;
        }
        Err(EngineError::ClosureDiverged(CLOSURE_ROUND_CAP))
    }

    /// Dimension of truncated ker(counit) modulo the truncated right ideal
    /// generated by `gens`, with representatives. Coordinates and the
    /// quadratic invariant are offered as representatives first, so they
    /// appear in the basis whenever they are independent modulo the ideal.
    pub fn quotient_dimension(
        &self,
        gens: &[Element],
        max_degree: usize,
    ) -> QuotientReport {
        let span = self.right_ideal_span(gens, max_degree);
        let mut words: Vec<Element> = Vec::new();
        for d in 1..=max_degree {
            words.extend(self.graded_basis(d).words);
        }
        let kernel_dim = words.len();
        let ideal_dim = span.rank();
        let mut rows = span.rows().clone();
        let mut candidates: Vec<Element> =
            (0..self.dim()).map(|mu| self.mink().x(mu)).collect();
        candidates.push(self.mink().phi());
        candidates.extend(words);
        let mut representatives = Vec::new();
        for e in candidates {
            if rows.insert(LinVec::from_element(&e)) {
                representatives.push(e);
            }
        }
        let quotient_dim = representatives.len();
        QuotientReport {
            truncation_degree: max_degree,
            kernel_dim,
            ideal_dim,
            quotient_dim,
            representatives,
        }
    }

    /// Smallest degree D <= max_degree such that the truncated ideal
    /// contains a nonzero element of degree <= D, or None when the ideal
    /// meets no such low-degree subspace.
    pub fn lowest_member_degree(
        &self,
        gens: &[Element],
        max_degree: usize,
    ) -> Option<usize> {
        let span = self.right_ideal_span(gens, max_degree);
        let mut rows = span.rows().clone();
        let mut words_seen = 0usize;
        let mut independent = span.rank();
        let base = span.rank();
        for d in 1..=max_degree {
            for e in self.graded_basis(d).words {
                words_seen += 1;
                if rows.insert(LinVec::from_element(&e)) {
                    independent += 1;
                }
            }
            // rank(R + V_d) = rank(R) + dim V_d - dim(R intersect V_d).
            if independent - base < words_seen {
                return Some(d);
            }
        }
        None
    }

    /// True when star(antipode(q)) stays in the truncated right ideal of the
    /// traceless generators, for every traceless generator q.
    pub fn star_antipode_stability(&self, max_degree: usize) -> bool {
        let gens = self.traceless_generators();
        let targets: Vec<Element> =
            gens.iter().map(|q| q.antipode().star()).collect();
        ideals_contain(&targets, &gens, Side::Right, max_degree)
            .into_iter()
            .all(|ok| ok)
    }

    /// The classification experiments as a check list: closures and quotient
    /// dimensions of the three distinguished ideals, the lowest degree where
    /// the traceless ideal starts, and its star-antipode stability.
    pub fn classification_suite(&self, max_degree: usize) -> Vec<Check> {
        let n = self.dim();
        let mut checks = Vec::new();
        let mut seed_q: Option<usize> = None;
        let mut full_q: Option<usize> = None;

        match self.covariant_closure(&[self.mink().x(0)], max_degree) {
            Ok(closure) => {
                let span = self.right_ideal_span(&closure, 1);
                let all = closure.len() == n
                    && (0..n).all(|mu| span.contains(&self.mink().x(mu)));
                checks.push(Check::from_bool(
                    "seed-closure-yields-every-coordinate",
                    all,
                    format!(
                        "closing the single seed x0 under the coaction yields exactly the {n} coordinates"
                    ),
                    format!(
                        "closure of x0 has {} members and misses a coordinate",
                        closure.len()
                    ),
                ));
                let q = self.quotient_dimension(&closure, max_degree);
                seed_q = Some(q.quotient_dim);
                checks.push(Check::from_bool(
                    "seed-closure-quotient-vanishes",
                    q.quotient_dim == 0,
                    format!(
                        "quotient dimension 0 at truncation degree {max_degree}: the induced calculus is trivial"
                    ),
                    format!("quotient dimension {} instead of 0", q.quotient_dim),
                ));
            }
            Err(e) => {
                checks.push(Check::fail("seed-closure-yields-every-coordinate", e.to_string()));
                checks.push(Check::fail("seed-closure-quotient-vanishes", e.to_string()));
            }
        }

        let mut full = Vec::with_capacity(n * n);
        for mu in 0..n {
            for nu in 0..n {
                full.push(self.x_munu(mu, nu));
            }
        }
        match self.covariant_closure(&full, max_degree) {
            Ok(closure) => checks.push(Check::from_bool(
                "full-quadratic-closure-is-stable",
                closure.len() == full.len(),
                "the family of all quadratic combinations x{mu,nu} is coaction-stable",
                "the coaction forces new members into the full quadratic family",
            )),
            Err(e) => {
                checks.push(Check::fail("full-quadratic-closure-is-stable", e.to_string()))
            }
        }
        // Absorbing a coordinate into the quadratic ideal takes a degree-3
        // product (x{0,j}*xj - x{j,j}*x0 and its follow-ups), so the quotient
        // only vanishes once the truncation admits that derivation.
        if max_degree >= 3 {
            let q_full = self.quotient_dimension(&full, max_degree);
            full_q = Some(q_full.quotient_dim);
            checks.push(Check::from_bool(
                "full-quadratic-quotient-vanishes",
                q_full.quotient_dim == 0,
                format!(
                    "quotient dimension 0 at truncation degree {max_degree}: every coordinate is absorbed, the calculus is trivial"
                ),
                format!("quotient dimension {} instead of 0", q_full.quotient_dim),
            ));
        } else {
            checks.push(Check::skipped(
                "full-quadratic-quotient-vanishes",
                format!(
                    "absorbing the coordinates needs degree-3 products; truncation degree {max_degree} is too low to decide"
                ),
            ));
        }

        let gens = self.traceless_generators();
        match self.covariant_closure(&gens, max_degree) {
            Ok(closure) => checks.push(Check::from_bool(
                "traceless-closure-is-stable",
                closure.len() == gens.len(),
                "the traceless quadratic ideal is coaction-stable",
                "the coaction forces new members into the traceless ideal",
            )),
            Err(e) => checks.push(Check::fail("traceless-closure-is-stable", e.to_string())),
        }
        let q = self.quotient_dimension(&gens, max_degree);
        let mut expected: Vec<Element> = (0..n).map(|mu| self.mink().x(mu)).collect();
        expected.push(self.mink().phi());
        checks.push(Check::from_bool(
            "traceless-quotient-is-coordinates-plus-invariant",
            q.quotient_dim == n + 1 && q.representatives == expected,
            format!(
                "quotient dimension {} at truncation degree {max_degree}, represented by the coordinates and the quadratic invariant",
                n + 1
            ),
            format!(
                "quotient dimension {} with unexpected representatives",
                q.quotient_dim
            ),
        ));
        checks.push(Check::from_bool(
            "traceless-ideal-starts-in-degree-two",
            self.lowest_member_degree(&gens, max_degree) == Some(2),
            "no degree-1 element lies in the traceless ideal; degree 2 is populated",
            "the traceless ideal meets the wrong degrees",
        ));
        checks.push(Check::from_bool(
            "traceless-star-antipode-stability",
            self.star_antipode_stability(max_degree.min(3)),
            "star(antipode(q)) stays in the ideal for every traceless generator",
            "star(antipode(q)) escapes the ideal for some generator",
        ));
        let fmt_q = |q: Option<usize>| match q {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        };
        checks.push(Check::info(
            "quotient-dimension-summary",
            format!(
                "truncation degree {max_degree}: seed-x0 ideal {}, full quadratic family {}, traceless family {}",
                fmt_q(seed_q),
                fmt_q(full_q),
                q.quotient_dim
            ),
        ));
        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lab(n: usize) -> IdealLab {
        IdealLab::new(Metric::mostly_minus(n)).expect("valid metric")
    }

    #[test]
    fn graded_basis_counts_match_monomial_counts() {
        for n in 2..=4 {
            let lab = lab(n);
            for d in 0..=4 {
                let basis = lab.graded_basis(d);
                assert_eq!(basis.degree, d);
                assert_eq!(basis.words.len(), monomial_count(n, d));
                let mut seen: BTreeSet<Word> = BTreeSet::new();
                for e in &basis.words {
                    assert_eq!(e.term_count(), 1);
                    let (w, c) = e.terms().next().expect("single term");
                    assert_eq!(w.len(), d);
                    assert!(c.is_one());
                    assert!(seen.insert(w.clone()), "duplicate word in basis");
                }
            }
        }
        assert_eq!(monomial_count(2, 3), 4);
        assert_eq!(monomial_count(3, 4), 15);
        assert_eq!(monomial_count(4, 4), 35);
    }

    #[test]
    fn quadratic_combination_delegates_to_the_algebra() {
        let lab = lab(3);
        for mu in 0..3 {
            for nu in 0..3 {
                assert_eq!(lab.x_munu(mu, nu), lab.mink().x_munu(mu, nu));
            }
        }
    }

    #[test]
    fn traceless_generators_are_symmetric_traceless_and_counit_free() {
        for metric in [Metric::mostly_minus(2), Metric::mostly_minus(4), Metric::parse("+++").unwrap()] {
            let n = metric.dim();
            let lab = IdealLab::new(metric).expect("valid metric");
            let gens = lab.traceless_generators();
            assert_eq!(gens.len(), n * n);
            let mut trace = lab.mink().zero();
            for mu in 0..n {
                for nu in 0..n {
                    assert_eq!(gens[mu * n + nu], gens[nu * n + mu]);
                    assert!(gens[mu * n + nu].counit().is_zero());
                }
                trace = &trace + &gens[mu * n + mu].scale(&lab.mink().metric().scalar(mu));
            }
            assert!(trace.is_zero(), "weighted trace must vanish exactly");
        }
    }

    #[test]
    fn right_ideal_span_fixture_for_the_time_coordinate() {
        let lab = lab(2);
        let m = lab.mink();
        let span = lab.right_ideal_span(&[m.x(0)], 2);
        assert_eq!(span.rank(), 3);
        assert!(span.contains(&m.x(0)));
        assert!(span.contains(&(&m.x(0) * &m.x(0))));
        assert!(span.contains(&(&m.x(0) * &m.x(1))));
        assert!(!span.contains(&m.x(1)));
        let empty = lab.right_ideal_span(&[], 3);
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn right_ideal_span_is_monotone() {
        let lab = lab(2);
        let gens = lab.traceless_generators();
        let r2 = lab.right_ideal_span(&gens, 2).rank();
        let r3 = lab.right_ideal_span(&gens, 3).rank();
        let r4 = lab.right_ideal_span(&gens, 4).rank();
        assert!(r2 <= r3 && r3 <= r4);
        let partial = lab.right_ideal_span(&gens[..2], 3).rank();
        assert!(partial <= r3);
    }

    #[test]
    fn traceless_span_rank_at_degree_two() {
        // At n = 2 the four generators satisfy one exact trace relation and
        // one symmetry duplication, leaving two independent quadratics.
        let lab = lab(2);
        let gens = lab.traceless_generators();
        assert_eq!(lab.right_ideal_span(&gens, 2).rank(), 2);
    }

    #[test]
    fn covariant_closure_of_one_coordinate_yields_all_coordinates() {
        for n in [2usize, 3] {
            let lab = lab(n);
            let m = lab.mink();
            let closure = lab
                .covariant_closure(&[m.x(0)], 4)
                .expect("closure converges");
            assert_eq!(closure.len(), n);
            let span = lab.right_ideal_span(&closure, 1);
            for mu in 0..n {
                assert!(span.contains(&m.x(mu)), "x{mu} must enter the closure");
            }
        }
    }

    #[test]
    fn covariant_closure_of_the_traceless_ideal_is_stable() {
        for n in [2usize, 3] {
            let lab = lab(n);
            let gens = lab.traceless_generators();
            let closure = lab
                .covariant_closure(&gens, 4)
                .expect("closure converges");
            assert_eq!(closure.len(), gens.len(), "stability means nothing is added");
        }
    }

    #[test]
    fn covariant_closure_of_the_full_quadratic_family_is_stable() {
        let lab = lab(2);
        let mut gens = Vec::new();
        for mu in 0..2 {
            for nu in 0..2 {
                gens.push(lab.x_munu(mu, nu));
            }
        }
        let closure = lab.covariant_closure(&gens, 4).expect("closure converges");
        assert_eq!(closure.len(), gens.len());
    }

    #[test]
    fn covariant_closure_validates_input_and_accepts_emptiness() {
        let lab = lab(2);
        let err = lab.covariant_closure(&[lab.mink().unit()], 3);
        assert!(matches!(err, Err(EngineError::NotInCounitKernel)));
        let empty = lab.covariant_closure(&[], 3).expect("empty input");
        assert!(empty.is_empty());
        let too_low = lab.covariant_closure(&lab.traceless_generators(), 1);
        assert!(matches!(
            too_low,
            Err(EngineError::TruncationBelowGenerators { degree: 1, need: 2 })
        ));
    }

    #[test]
    fn quotient_of_the_traceless_ideal_is_coordinates_plus_invariant() {
        for n in [2usize, 3] {
            let lab = lab(n);
            let gens = lab.traceless_generators();
            for d in 2..=4 {
                let report = lab.quotient_dimension(&gens, d);
                assert_eq!(report.quotient_dim, n + 1, "n={n} d={d}");
                assert_eq!(report.kernel_dim, report.ideal_dim + report.quotient_dim);
                assert_eq!(report.representatives.len(), n + 1);
                for mu in 0..n {
                    assert_eq!(report.representatives[mu], lab.mink().x(mu));
                }
                assert_eq!(report.representatives[n], lab.mink().phi());
            }
        }
        let lab4 = lab(4);
        let report = lab4.quotient_dimension(&lab4.traceless_generators(), 2);
        assert_eq!(report.quotient_dim, 5);
    }

    #[test]
    fn quotients_of_the_larger_covariant_ideals_vanish() {
        let lab = lab(2);
        let mut full = Vec::new();
        for mu in 0..2 {
            for nu in 0..2 {
                full.push(lab.x_munu(mu, nu));
            }
        }
        let report = lab.quotient_dimension(&full, 4);
        assert_eq!(report.quotient_dim, 0);
        assert!(report.representatives.is_empty());

        let seed = lab
            .covariant_closure(&[lab.mink().x(0)], 4)
            .expect("closure converges");
        let report = lab.quotient_dimension(&seed, 4);
        assert_eq!(report.quotient_dim, 0);
    }

    #[test]
    fn lowest_member_degree_detects_where_the_ideal_starts() {
        let lab2 = lab(2);
        let gens = lab2.traceless_generators();
        assert_eq!(lab2.lowest_member_degree(&gens, 4), Some(2));
        assert_eq!(lab2.lowest_member_degree(&[lab2.mink().x(0)], 4), Some(1));
        assert_eq!(lab2.lowest_member_degree(&[], 4), None);
        let lab3 = lab(3);
        let gens3 = lab3.traceless_generators();
        assert_eq!(lab3.lowest_member_degree(&gens3, 3), Some(2));
    }

    #[test]
    fn star_antipode_stability_of_the_traceless_ideal() {
        assert!(lab(2).star_antipode_stability(3));
        assert!(lab(3).star_antipode_stability(3));
    }

    #[test]
    fn classification_suite_passes_in_two_dimensions() {
        let lab = lab(2);
        let checks = lab.classification_suite(4);
        for c in &checks {
            assert_ne!(
                c.status,
                crate::report::CheckStatus::Fail,
                "{}: {}",
                c.name,
                c.detail
            );
        }
        assert_eq!(checks.len(), 9);
        let summary = checks.iter().find(|c| c.name == "quotient-dimension-summary");
        assert!(summary.expect("summary present").detail.contains("traceless family 3"));
    }

    #[test]
    fn classification_suite_skips_what_low_truncation_cannot_decide() {
        let lab = lab(2);
        let checks = lab.classification_suite(2);
        let quot = checks
            .iter()
            .find(|c| c.name == "full-quadratic-quotient-vanishes")
            .expect("check present");
        assert_eq!(quot.status, crate::report::CheckStatus::Skipped);
        assert!(quot.detail.contains("degree-3 products"));
        assert!(checks
            .iter()
            .all(|c| c.status != crate::report::CheckStatus::Fail));
    }

    #[test]
    fn lab_rejects_a_minus_time_sign() {
        match IdealLab::new(Metric::parse("-+").expect("valid signature")) {
            Err(e) => assert!(matches!(e, EngineError::TimeSignNotPlus)),
            Ok(_) => panic!("the symmetry needs a + time sign"),
        }
    }

    #[test]
    fn star_antipode_stability_is_immediate_for_coordinates() {
        let lab = lab(3);
        let m = lab.mink();
        let gens: Vec<Element> = (0..3).map(|mu| m.x(mu)).collect();
        let targets: Vec<Element> =
            gens.iter().map(|g| g.antipode().star()).collect();
        for (g, t) in gens.iter().zip(&targets) {
            assert_eq!(t, &-g, "antipode then star negates a coordinate");
        }
        assert!(ideals_contain(&targets, &gens, Side::Right, 1)
            .into_iter()
            .all(|ok| ok));
    }
}

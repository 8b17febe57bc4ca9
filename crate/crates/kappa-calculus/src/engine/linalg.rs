//! Exact linear algebra over the coefficient ring, used for truncated ideal
//! membership.
//!
//! Elements are flattened to sparse vectors indexed by normal words in
//! graded-lexicographic order. Row reduction is fraction-free: when a pivot
//! coefficient does not divide exactly we cross-multiply and later strip the
//! polynomial content, so every intermediate value stays in the ring. All
//! spans are taken over the fraction field (rational functions of the
//! deformation parameter), which is harmless here because the parameter is
//! central and invertible scalars do not change ideal membership.
//!
//! Membership in a finitely generated one- or two-sided ideal is tested
//! against the span of `m1·g·m2` with the *pre-normalization* degree bounded
//! by `max_degree`. A `true` answer is therefore exact; a `false` answer
//! means "not visible at this truncation degree".

use super::{Element, Gen, Presentation, Word};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Graded-lexicographic key for a normal word: length first, then the word.
pub type Coord = (u32, Word);

pub fn word_coord(w: &Word) -> Coord {
    (w.len() as u32, w.clone())
}

/// Sparse vector over the scalar ring, indexed by graded-lex word keys.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinVec {
    terms: BTreeMap<Coord, Scalar>,
}

impl LinVec {
    pub fn zero() -> Self {
        LinVec { terms: BTreeMap::new() }
    }

    pub fn from_element(e: &Element) -> Self {
        let mut v = LinVec::zero();
        for (w, c) in e.terms() {
            v.terms.insert(word_coord(w), c.clone());
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_element(&self, pres: &Arc<Presentation>) -> Element {
        Element::normalize(
            pres,
            self.terms.iter().map(|((_, w), c)| (w.clone(), c.clone())).collect(),
        )
        .expect("coordinates are valid words")
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &Coord) -> Option<&Scalar> {
        self.terms.get(c)
    }

    /// Largest coordinate (the pivot position in echelon form).
    pub fn pivot(&self) -> Option<(&Coord, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, c: Coord, s: Scalar) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(c) {
            Entry::Vacant(slot) => {
                slot.insert(s);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &s;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += k·other`.
    fn add_scaled(&mut self, other: &LinVec, k: &Scalar) {
        for (c, s) in &other.terms {
            self.insert_add(c.clone(), s * k);
        }
    }

    /// `self := p·self − q·other` (fraction-free elimination step).
    fn cross_eliminate(&mut self, p: &Scalar, other: &LinVec, q: &Scalar) {
        for s in self.terms.values_mut() {
            *s *= p;
        }
        self.add_scaled(other, &-q);
    }

    /// Divide out the polynomial content and, when the pivot coefficient is a
    /// single Laurent term (hence invertible), rescale so the pivot is 1.
    fn normalize_row(&mut self) {
        let mut coeffs = self.terms.values();
        let mut g = match coeffs.next() {
            Some(c) => c.clone(),
            None => return,
        };
        for c in coeffs {
            if g.is_one() {
                break;
            }
            g = Scalar::gcd(&g, c);
        }
        if !g.is_one() {
            for s in self.terms.values_mut() {
                *s = s.div_exact(&g).expect("content divides every coefficient");
            }
        }
        let pivot = self.pivot().map(|(_, c)| c.clone());
        if let Some(p) = pivot {
            if !p.is_one() {
                if let Some(inv) = Scalar::one().div_exact(&p) {
                    for s in self.terms.values_mut() {
                        *s *= &inv;
                    }
                }
            }
        }
    }
}

/// A set of echelon rows keyed by pivot coordinate.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: BTreeMap<Coord, LinVec>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn row_for(&self, c: &Coord) -> Option<&LinVec> {
        self.rows.get(c)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Coord> {
        self.rows.keys()
    }

    /// Reduce `v` modulo the rows. The result is zero iff `v` lies in the
    /// row span over the fraction field; otherwise it is a nonzero scalar
    /// multiple of the canonical residue. A single descending sweep suffices
    /// because every row's off-pivot coordinates sit strictly below its pivot.
    pub fn reduce(&self, mut v: LinVec) -> LinVec {
        let mut bound: Option<Coord> = None;
        loop {
            let cand = match &bound {
                None => v
                    .terms
                    .keys()
                    .rev()
                    .find(|c| self.rows.contains_key(*c))
                    .cloned(),
                Some(b) => v
                    .terms
                    .range(..b.clone())
                    .rev()
                    .map(|(c, _)| c)
                    .find(|c| self.rows.contains_key(*c))
                    .cloned(),
            };
            let Some(c) = cand else { break };
            let row = &self.rows[&c];
            let vc = v.terms[&c].clone();
            let rp = row.terms[&c].clone();
            match vc.div_exact(&rp) {
                Some(q) => v.add_scaled(row, &-&q),
                None => v.cross_eliminate(&rp, row, &vc),
            }
            debug_assert!(!v.terms.contains_key(&c));
            bound = Some(c);
        }
        v
    }

    /// Add a vector to the span. Returns `false` when it was already a member.
    pub fn insert(&mut self, v: LinVec) -> bool {
        let mut r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        r.normalize_row();
        let p = r.pivot().expect("nonzero row has a pivot").0.clone();
        debug_assert!(!self.rows.contains_key(&p));
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &LinVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    pub fn contains_element(&self, e: &Element) -> bool {
        self.contains(&LinVec::from_element(e))
    }

    /// True when every stored row has pivot coefficient exactly 1. Reduction
    /// against such rows never cross-multiplies, so it is a *linear*,
    /// scale-preserving projection with the row span as kernel — the
    /// property needed when reducing one tensor leg at a time.
    pub fn pivots_are_units(&self) -> bool {
        self.rows.values().all(|r| r.pivot().map_or(false, |(_, c)| c.is_one()))
    }
}

/// Which multipliers accompany the generators when spanning an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// The truncated span of an ideal: all `m1·g·m2` whose pre-normalization
/// degree stays within `max_degree`, row-reduced once so repeated membership
/// queries are cheap.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    pres: Arc<Presentation>,
    side: Side,
    max_degree: usize,
    rows: RowSpace,
}

impl SpanBasis {
    pub fn build(
        pres: &Arc<Presentation>,
        gens: &[Element],
        side: Side,
        max_degree: usize,
    ) -> SpanBasis {
        let mut basis = SpanBasis {
            pres: pres.clone(),
            side,
            max_degree,
            rows: RowSpace::new(),
        };
        let alphabet: Vec<Gen> = (0..pres.gen_count() as Gen).collect();
        for tier in 0..=max_degree {
            basis.add_tier(gens, &alphabet, tier, |_, _| true);
        }
        basis
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rank(&self) -> usize {
        self.rows.rank()
    }

    pub fn rows(&self) -> &RowSpace {
        &self.rows
    }

    pub fn contains(&self, e: &Element) -> bool {
        assert!(
            e.presentation().same_as(&self.pres),
            "presentation mismatch in span membership"
        );
        self.rows.contains_element(e)
    }

    /// The canonical residue of `e` modulo the span. Requires unit pivots so
    /// the projection is linear (asserted); under that condition two elements
    /// are congruent modulo the span iff their residues are equal.
    pub fn reduce_element(&self, e: &Element) -> Element {
        assert!(
            self.rows.pivots_are_units(),
            "linear reduction requires unit pivot coefficients"
        );
        self.rows.reduce(LinVec::from_element(e)).to_element(&self.pres)
    }

    /// Insert every product `m1·g·m2` with `len(m1)+len(m2) == tier` and
    /// multiplier symbols drawn from `alphabet`. `keep` can veto a multiplier
    /// pair (used to skip pairs another pass has already generated).
    fn add_tier(
        &mut self,
        gens: &[Element],
        alphabet: &[Gen],
        tier: usize,
        keep: impl Fn(&Word, &Word) -> bool,
    ) {
        let splits: Vec<(usize, usize)> = match self.side {
            Side::Left => vec![(tier, 0)],
            Side::Right => vec![(0, tier)],
            Side::TwoSided => (0..=tier).map(|l| (l, tier - l)).collect(),
        };
        for g in gens {
            if g.is_zero() {
                continue;
            }
            assert!(
                g.presentation().same_as(&self.pres),
                "presentation mismatch in span generator"
            );
            let dg = g.degree().unwrap_or(0);
            if dg + tier > self.max_degree {
                continue;
            }
            for &(l1, l2) in &splits {
                let lefts = nondecreasing_words(alphabet, l1);
                let rights = nondecreasing_words(alphabet, l2);
                for m1 in &lefts {
                    for m2 in &rights {
                        if !keep(m1, m2) {
                            continue;
                        }
                        let raw: Vec<(Word, Scalar)> = g
                            .terms()
                            .map(|(w, c)| {
                                let mut word =
                                    Vec::with_capacity(m1.len() + w.len() + m2.len());
                                word.extend_from_slice(m1);
                                word.extend_from_slice(w);
                                word.extend_from_slice(m2);
                                (word, c.clone())
                            })
                            .collect();
                        let prod = Element::normalize(&self.pres, raw)
                            .expect("validated generators");
                        if !prod.is_zero() {
                            self.rows.insert(LinVec::from_element(&prod));
                        }
                    }
                }
            }
        }
    }
}

/// Convenience wrapper for the common two-sided case.
pub fn two_sided_span(
    pres: &Arc<Presentation>,
    gens: &[Element],
    max_degree: usize,
) -> SpanBasis {
    SpanBasis::build(pres, gens, Side::TwoSided, max_degree)
}

/// All nondecreasing words of the given length over a sorted alphabet.
/// These span the same multiplier space as arbitrary words because normal
/// forms never increase word length.
fn nondecreasing_words(alphabet: &[Gen], len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Word)> = vec![(0, Vec::new())];
    while let Some((start, w)) = stack.pop() {
        if w.len() == len {
            out.push(w);
            continue;
        }
        for i in start..alphabet.len() {
            let mut next = w.clone();
            next.push(alphabet[i]);
            stack.push((i, next));
        }
    }
    out
}

/// Batched truncated ideal membership with early exit.
///
/// Builds the span tier by tier (multiplier degree 0, 1, 2, …), first over
/// the restricted alphabet of symbols that actually occur in the generators
/// and targets, then over the full alphabet, re-testing the outstanding
/// targets after every tier and stopping as soon as all are settled. Most
/// witnesses live at low multiplier degree, so this usually avoids building
/// the full span.
pub fn ideals_contain(
    targets: &[Element],
    gens: &[Element],
    side: Side,
    max_degree: usize,
) -> Vec<bool> {
    let mut results = vec![false; targets.len()];
    let mut residues: Vec<Option<LinVec>> = Vec::with_capacity(targets.len());
    for (i, t) in targets.iter().enumerate() {
        if t.is_zero() {
            results[i] = true;
            residues.push(None);
        } else {
            residues.push(Some(LinVec::from_element(t)));
        }
    }
    let live_gens: Vec<&Element> = gens.iter().filter(|g| !g.is_zero()).collect();
    if live_gens.is_empty() || residues.iter().all(Option::is_none) {
        return results;
    }
    let pres = live_gens[0].presentation().clone();
    for t in targets {
        assert!(
            t.presentation().same_as(&pres),
            "presentation mismatch in ideal membership"
        );
    }

    let mut used: BTreeSet<Gen> = BTreeSet::new();
    for e in gens.iter().chain(targets.iter()) {
        for (w, _) in e.terms() {
            used.extend(w.iter().copied());
        }
    }
    let restricted: Vec<Gen> = used.iter().copied().collect();
    let full: Vec<Gen> = (0..pres.gen_count() as Gen).collect();
    let gens_owned: Vec<Element> = live_gens.iter().map(|g| (*g).clone()).collect();

    let mut basis = SpanBasis {
        pres: pres.clone(),
        side,
        max_degree,
        rows: RowSpace::new(),
    };

    let settle = |basis: &SpanBasis,
                      residues: &mut Vec<Option<LinVec>>,
                      results: &mut Vec<bool>|
     -> bool {
        let mut open = false;
        for (i, slot) in residues.iter_mut().enumerate() {
            if let Some(v) = slot.take() {
                let r = basis.rows.reduce(v);
                if r.is_zero() {
                    results[i] = true;
                } else {
                    *slot = Some(r);
                    open = true;
                }
            }
        }
        open
    };

    let two_passes = restricted.len() < full.len();
    for tier in 0..=max_degree {
        basis.add_tier(&gens_owned, &restricted, tier, |_, _| true);
        if !settle(&basis, &mut residues, &mut results) {
            return results;
        }
    }
    if two_passes {
        let in_restricted =
            |w: &Word| w.iter().all(|g| used.contains(g));
        for tier in 0..=max_degree {
            basis.add_tier(&gens_owned, &full, tier, |m1: &Word, m2: &Word| {
                !(in_restricted(m1) && in_restricted(m2))
            });
            if !settle(&basis, &mut residues, &mut results) {
                return results;
            }
        }
    }
    results
}

/// Truncated membership of a single element.
pub fn ideal_membership(
    target: &Element,
    gens: &[Element],
    side: Side,
    max_degree: usize,
) -> bool {
    ideals_contain(std::slice::from_ref(target), gens, side, max_degree)[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Arc<Presentation> {
        let mut b = Presentation::builder("toy-linalg");
        let g0 = b.generator("x0");
        let g1 = b.generator("x1");
        b.swap_rule(g1, g0, vec![(vec![g1], -&Scalar::i_lambda())]);
        b.build()
    }

    #[test]
    fn right_ideal_of_first_generator() {
        // Right multiples of x0 span exactly the normal words that start
        // with x0 (the leading symbol never moves right during rewriting).
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let gens = [x0.clone()];
        assert!(ideal_membership(&(&x0 * &x1), &gens, Side::Right, 3));
        assert!(!ideal_membership(&(&x1 * &x0), &gens, Side::Right, 3));
        // Two-sided, the left multiplier x1 makes it reachable.
        assert!(ideal_membership(&(&x1 * &x0), &gens, Side::TwoSided, 3));
    }

    #[test]
    fn zero_is_always_a_member() {
        let p = toy();
        let x0 = Element::generator(&p, 0);
        assert!(ideal_membership(&Element::zero(&p), &[x0], Side::Right, 1));
    }

    #[test]
    fn unit_ideal_reaches_everything() {
        let p = toy();
        let one = Element::unit(&p);
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let target = &(&x0 * &x1) - &x1.scale(&Scalar::i_lambda());
        assert!(ideal_membership(&target, &[one], Side::Right, 2));
    }

    #[test]
    fn fraction_free_elimination_handles_nonunit_pivots() {
        // Rows whose pivot coefficient is a genuine polynomial force the
        // cross-multiplication path; membership must still be exact.
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let lam2 = Scalar::lambda_pow(2);
        let one_plus = &Scalar::one() + &lam2;
        // g = (1+λ²)x1 + x0
        let g = &x1.scale(&one_plus) + &x0;
        let mut rows = RowSpace::new();
        rows.insert(LinVec::from_element(&g));
        // 2g is in the span, and x1 alone is not.
        assert!(rows.contains_element(&g.scale(&Scalar::from_integer(2))));
        assert!(!rows.contains_element(&x1));
        // Adding x0 reveals x1 after exact cancellation of the pivot tail.
        rows.insert(LinVec::from_element(&x0));
        assert!(rows.contains_element(&x1));
        assert_eq!(rows.rank(), 2);
    }

    #[test]
    fn rank_counts_independent_rows() {
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let mut rows = RowSpace::new();
        assert!(rows.insert(LinVec::from_element(&x0)));
        assert!(rows.insert(LinVec::from_element(&x1)));
        assert!(!rows.insert(LinVec::from_element(&(&x0 + &x1))));
        assert_eq!(rows.rank(), 2);
    }

    #[test]
    fn span_basis_reports_rank() {
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let span = SpanBasis::build(&p, &[x0], Side::Right, 2);
        // x0·{I, x0, x1} → x0, x0², x0x1: three independent rows.
        assert_eq!(span.rank(), 3);
        assert!(span.contains(&Element::generator(&p, 0)));
    }
}

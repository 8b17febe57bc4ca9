//! A small engine for finitely presented associative `*`-algebras whose
//! defining relations are "swap rules": for generators `g_i < g_j` in a fixed
//! total order, `g_j·g_i = g_i·g_j + (correction)`, with each correction
//! strictly smaller in a graded termination order. Words with nondecreasing
//! generator indices are the normal words; every element has a unique
//! canonical form as a finite map from normal words to nonzero [`Scalar`]s.
//!
//! The same presentation record carries the Hopf structure tables (coproduct,
//! counit, antipode) and the `*`-involution, extended to products by
//! (anti)homomorphism.

mod linalg;
mod sample;
mod tensor;

pub use linalg::{
    ideal_membership, ideals_contain, two_sided_span, word_coord, Coord, LinVec, RowSpace,
    Side, SpanBasis,
};
pub use sample::{random_element, random_scalar, SampleCfg};
pub use tensor::TensorElement;

use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Generator index into a presentation's ordered generator list.
pub type Gen = u16;

/// A product of generators; normal iff the indices are nondecreasing.
pub type Word = Vec<Gen>;

/// A formal sum of (not necessarily normal) words.
pub type RawSum = Vec<(Word, Scalar)>;

/// A formal sum of word pairs, used for coproduct tables.
pub type RawTensor = Vec<(Word, Word, Scalar)>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("presentation mismatch: `{0}` vs `{1}`")]
    PresentationMismatch(String, String),
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("signature string must consist of '+' and '-' only")]
    BadSignature,
    #[error("the quantum symmetry and its calculus require time sign +1 in the signature")]
    TimeSignNotPlus,
    #[error("element is not in the counit kernel")]
    NotInCounitKernel,
    #[error("tensor components do not multiply to zero")]
    NotUniversal,
    #[error("tensor factor count mismatch: expected {0}, got {1}")]
    FactorMismatch(usize, usize),
    #[error("closure did not stabilize within {0} rounds")]
    ClosureDiverged(usize),
    #[error("truncation degree {degree} cannot represent a generator of degree {need}")]
    TruncationBelowGenerators { degree: usize, need: usize },
}

/// Immutable presentation of one algebra. Construct via [`Presentation::builder`].
#[derive(Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    /// `(g_j, g_i) → correction` for `j > i`; absent pairs commute exactly.
    swap: HashMap<(Gen, Gen), RawSum>,
    counit: Vec<Scalar>,
    antipode: Vec<RawSum>,
    star: Vec<RawSum>,
    coproduct: Vec<RawTensor>,
    /// Grade class per generator; the termination order compares the
    /// class-degree vector lexicographically (class 0 counted first),
    /// then the number of adjacent inversions.
    degree_class: Vec<u8>,
}

impl Presentation {
    pub fn builder(name: impl Into<String>) -> PresentationBuilder {
        PresentationBuilder {
            name: name.into(),
            generators: Vec::new(),
            swap: HashMap::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
            star: Vec::new(),
            coproduct: Vec::new(),
            degree_class: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gen_count(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_symbol(&self, g: Gen) -> &str {
        &self.generators[g as usize]
    }

    pub fn same_as(&self, other: &Presentation) -> bool {
        std::ptr::eq(self, other) || self.name == other.name
    }

    fn class_degrees(&self, w: &[Gen]) -> Vec<u32> {
        let nclasses = self.degree_class.iter().copied().max().unwrap_or(0) as usize + 1;
        let mut deg = vec![0u32; nclasses];
        for &g in w {
            deg[self.degree_class[g as usize] as usize] += 1;
        }
        deg
    }

    /// Verify that every swap-rule correction is strictly smaller than its
    /// left-hand side in the termination order, which makes the rewrite
    /// system terminating on all inputs.
    pub fn audit_termination(&self) -> Result<(), String> {
        for (&(gj, gi), corr) in &self.swap {
            if gj <= gi {
                return Err(format!(
                    "swap rule indexed by ({}, {}) is not ordered high-to-low",
                    self.gen_symbol(gj),
                    self.gen_symbol(gi)
                ));
            }
            let lhs_deg = self.class_degrees(&[gi, gj]);
            for (w, _) in corr {
                let w_deg = self.class_degrees(w);
                if w_deg >= lhs_deg {
                    return Err(format!(
                        "correction word {:?} for rule {}·{} does not drop the graded measure",
                        w,
                        self.gen_symbol(gj),
                        self.gen_symbol(gi)
                    ));
                }
            }
        }
        Ok(())
    }

    /// All normal words of the given degree (nondecreasing index sequences).
    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        let n = self.gen_count() as Gen;
        let mut out = Vec::new();
        let mut cur: Word = Vec::with_capacity(degree);
        fn rec(n: Gen, degree: usize, start: Gen, cur: &mut Word, out: &mut Vec<Word>) {
            if cur.len() == degree {
                out.push(cur.clone());
                return;
            }
            for g in start..n {
                cur.push(g);
                rec(n, degree, g, cur, out);
                cur.pop();
            }
        }
        rec(n, degree, 0, &mut cur, &mut out);
        out
    }

    /// All normal words of degree 1..=max_degree, graded order.
    pub fn normal_words_up_to(&self, max_degree: usize) -> Vec<Word> {
        (1..=max_degree).flat_map(|d| self.normal_words(d)).collect()
    }
}

pub struct PresentationBuilder {
    name: String,
    generators: Vec<String>,
    swap: HashMap<(Gen, Gen), RawSum>,
    counit: Vec<Scalar>,
    antipode: Vec<RawSum>,
    star: Vec<RawSum>,
    coproduct: Vec<RawTensor>,
    degree_class: Vec<u8>,
}

impl PresentationBuilder {
    /// Append a generator; returns its index (also its place in the order).
    /// Defaults: counit 0, antipode −g, star g (hermitian), primitive
    /// coproduct `I⊗g + g⊗I`, degree class 0.
    pub fn generator(&mut self, symbol: impl Into<String>) -> Gen {
        let g = self.generators.len() as Gen;
        self.generators.push(symbol.into());
        self.counit.push(Scalar::zero());
        self.antipode.push(vec![(vec![g], -&Scalar::one())]);
        self.star.push(vec![(vec![g], Scalar::one())]);
        self.coproduct
            .push(vec![(vec![], vec![g], Scalar::one()), (vec![g], vec![], Scalar::one())]);
        self.degree_class.push(0);
        g
    }

    /// Install `g_j·g_i → g_i·g_j + correction` for `j > i`.
    pub fn swap_rule(&mut self, gj: Gen, gi: Gen, correction: RawSum) -> &mut Self {
        assert!(gj > gi, "swap rule must be indexed high-to-low");
        let corr: RawSum = correction.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !corr.is_empty() {
            self.swap.insert((gj, gi), corr);
        }
        self
    }

    pub fn counit(&mut self, g: Gen, value: Scalar) -> &mut Self {
        self.counit[g as usize] = value;
        self
    }

    pub fn antipode(&mut self, g: Gen, value: RawSum) -> &mut Self {
        self.antipode[g as usize] = value;
        self
    }

    pub fn star(&mut self, g: Gen, value: RawSum) -> &mut Self {
        self.star[g as usize] = value;
        self
    }

    pub fn coproduct(&mut self, g: Gen, value: RawTensor) -> &mut Self {
        self.coproduct[g as usize] = value;
        self
    }

    pub fn degree_class(&mut self, g: Gen, class: u8) -> &mut Self {
        self.degree_class[g as usize] = class;
        self
    }

    pub fn build(self) -> Arc<Presentation> {
        let p = Presentation {
            name: self.name,
            generators: self.generators,
            swap: self.swap,
            counit: self.counit,
            antipode: self.antipode,
            star: self.star,
            coproduct: self.coproduct,
            degree_class: self.degree_class,
        };
        p.audit_termination().expect("presentation fails the termination audit");
        Arc::new(p)
    }
}

/// Which adjacent inversion the rewrite loop reduces first. The result is
/// independent of the choice (confluence); the option exists so tests can
/// assert exactly that.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionOrder {
    LeftmostInversion,
    RightmostInversion,
}

/// An element in canonical form: a finite sum of normal words with nonzero
/// scalar coefficients.
#[derive(Clone, Debug)]
pub struct Element {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_as(&other.pres) && self.terms == other.terms
    }
}
impl Eq for Element {}

impl Element {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        Element { pres: pres.clone(), terms: BTreeMap::new() }
    }

    pub fn unit(pres: &Arc<Presentation>) -> Self {
        Element::scalar(pres, Scalar::one())
    }

    pub fn scalar(pres: &Arc<Presentation>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Element { pres: pres.clone(), terms }
    }

    pub fn generator(pres: &Arc<Presentation>, g: Gen) -> Self {
        assert!((g as usize) < pres.gen_count(), "generator index out of range");
        Element { pres: pres.clone(), terms: BTreeMap::from([(vec![g], Scalar::one())]) }
    }

    /// Canonicalize an arbitrary formal sum of words.
    pub fn normalize(pres: &Arc<Presentation>, raw: RawSum) -> Result<Self, EngineError> {
        Self::normalize_with(pres, raw, ReductionOrder::LeftmostInversion)
    }

    pub fn normalize_with(
        pres: &Arc<Presentation>,
        raw: RawSum,
        order: ReductionOrder,
    ) -> Result<Self, EngineError> {
        for (w, _) in &raw {
            for &g in w {
                if g as usize >= pres.gen_count() {
                    return Err(EngineError::UnknownGenerator(g as usize));
                }
            }
        }
        Ok(Self::normalize_unchecked(pres, raw, order))
    }

    fn normalize_unchecked(pres: &Arc<Presentation>, raw: RawSum, order: ReductionOrder) -> Self {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut work: Vec<(Word, Scalar)> =
            raw.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        while let Some((w, c)) = work.pop() {
            let inv = match order {
                ReductionOrder::LeftmostInversion => {
                    (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1])
                }
                ReductionOrder::RightmostInversion => {
                    (0..w.len().saturating_sub(1)).rev().find(|&p| w[p] > w[p + 1])
                }
            };
            match inv {
                None => {
                    let entry = acc.entry(w).or_insert_with(Scalar::zero);
                    *entry += &c;
                    if entry.is_zero() {
                        // defer removal; pruned below
                    }
                }
                Some(p) => {
                    let key = (w[p], w[p + 1]);
                    let mut main = w.clone();
                    main.swap(p, p + 1);
                    if let Some(corr) = pres.swap.get(&key) {
                        for (cw, cc) in corr {
                            let mut nw = Vec::with_capacity(w.len() - 2 + cw.len());
                            nw.extend_from_slice(&w[..p]);
                            nw.extend_from_slice(cw);
                            nw.extend_from_slice(&w[p + 2..]);
                            work.push((nw, &c * cc));
                        }
                    }
                    work.push((main, c));
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Element { pres: pres.clone(), terms: acc }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &[Gen]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length present (0 for scalars; None when zero).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Element::zero(&self.pres);
        }
        Element {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    fn check_same(&self, other: &Element) -> Result<(), EngineError> {
        if self.pres.same_as(&other.pres) {
            Ok(())
        } else {
            Err(EngineError::PresentationMismatch(
                self.pres.name().to_string(),
                other.pres.name().to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, EngineError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Scalar::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Element { pres: self.pres.clone(), terms })
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, EngineError> {
        self.check_same(other)?;
        let mut raw: RawSum = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = Vec::with_capacity(wa.len() + wb.len());
                w.extend_from_slice(wa);
                w.extend_from_slice(wb);
                raw.push((w, ca * cb));
            }
        }
        Ok(Element::normalize_unchecked(&self.pres, raw, ReductionOrder::LeftmostInversion))
    }

    /// Counit, extended multiplicatively over words.
    pub fn counit(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (w, c) in &self.terms {
            let mut e = c.clone();
            for &g in w {
                e *= &self.pres.counit[g as usize];
                if e.is_zero() {
                    break;
                }
            }
            out += &e;
        }
        out
    }

    /// Antipode, extended antimultiplicatively: `S(g₁…g_k) = S(g_k)…S(g₁)`.
    pub fn antipode(&self) -> Element {
        self.map_words(|pres, w| {
            let mut raw: RawSum = vec![(Vec::new(), Scalar::one())];
            for &g in w.iter().rev() {
                raw = raw_mul(&raw, &pres.antipode[g as usize]);
            }
            raw
        })
    }

    /// `*`-involution: antilinear, antimultiplicative, using the per-generator table.
    pub fn star(&self) -> Element {
        let raw: RawSum = self
            .terms
            .iter()
            .flat_map(|(w, c)| {
                let mut acc: RawSum = vec![(Vec::new(), c.conj())];
                for &g in w.iter().rev() {
                    acc = raw_mul(&acc, &self.pres.star[g as usize]);
                }
                acc
            })
            .collect();
        Element::normalize_unchecked(&self.pres, raw, ReductionOrder::LeftmostInversion)
    }

    /// Apply `*` to a formal (possibly non-normal) sum and canonicalize.
    /// Used to check that relations are `*`-consistent.
    pub fn star_of_raw(pres: &Arc<Presentation>, raw: &RawSum) -> Element {
        let raw_star: RawSum = raw
            .iter()
            .flat_map(|(w, c)| {
                let mut acc: RawSum = vec![(Vec::new(), c.conj())];
                for &g in w.iter().rev() {
                    acc = raw_mul(&acc, &pres.star[g as usize]);
                }
                acc
            })
            .collect();
        Element::normalize_unchecked(pres, raw_star, ReductionOrder::LeftmostInversion)
    }

    /// Apply the antipode to a formal (possibly non-normal) sum and
    /// canonicalize. Used to check how the antipode acts on relations.
    pub fn antipode_of_raw(pres: &Arc<Presentation>, raw: &RawSum) -> Element {
        let mapped: RawSum = raw
            .iter()
            .flat_map(|(w, c)| {
                let mut acc: RawSum = vec![(Vec::new(), c.clone())];
                for &g in w.iter().rev() {
                    acc = raw_mul(&acc, &pres.antipode[g as usize]);
                }
                acc
            })
            .collect();
        Element::normalize_unchecked(pres, mapped, ReductionOrder::LeftmostInversion)
    }

    fn map_words(&self, f: impl Fn(&Presentation, &Word) -> RawSum) -> Element {
        let raw: RawSum = self
            .terms
            .iter()
            .flat_map(|(w, c)| {
                f(&self.pres, w).into_iter().map(move |(nw, nc)| (nw, &nc * c))
            })
            .collect();
        Element::normalize_unchecked(&self.pres, raw, ReductionOrder::LeftmostInversion)
    }

    /// Words sorted for printing: degree descending, lexicographic within a degree.
    pub(crate) fn display_order(&self) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(wa, _), (wb, _)| wb.len().cmp(&wa.len()).then_with(|| wa.cmp(wb)));
        v
    }
}

/// Concatenation product of two formal sums.
pub fn raw_mul(a: &RawSum, b: &RawSum) -> RawSum {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = Vec::with_capacity(wa.len() + wb.len());
            w.extend_from_slice(wa);
            w.extend_from_slice(wb);
            out.push((w, ca * cb));
        }
    }
    out
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("presentation mismatch in +")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_add(&-rhs).expect("presentation mismatch in -")
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("presentation mismatch in *")
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            pres: self.pres.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Print one normal word using generator symbols, with `^` powers for runs.
pub(crate) fn fmt_word(pres: &Presentation, w: &[Gen]) -> String {
    if w.is_empty() {
        return "I".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut idx = 0;
    while idx < w.len() {
        let g = w[idx];
        let mut run = 1;
        while idx + run < w.len() && w[idx + run] == g {
            run += 1;
        }
        if run == 1 {
            parts.push(pres.gen_symbol(g).to_string());
        } else {
            parts.push(format!("{}^{}", pres.gen_symbol(g), run));
        }
        idx += run;
    }
    parts.join("*")
}

/// Render `coefficient * body`, suppressing unit coefficients; `body` may be
/// empty (scalar term). Returns `(is_negative, rendered)` with the sign pulled out
/// when the coefficient is a single Laurent term.
pub(crate) fn fmt_coefficient_term(c: &Scalar, body: &str) -> (bool, String) {
    let terms = c.display_terms();
    if terms.len() == 1 {
        let (neg, coeff) = terms.into_iter().next().unwrap();
        if body.is_empty() {
            return (neg, coeff);
        }
        if coeff == "1" {
            return (neg, body.to_string());
        }
        return (neg, format!("{}*{}", coeff, body));
    }
    // Multi-term coefficient: keep it parenthesized with its own signs.
    if body.is_empty() {
        (false, format!("({})", c))
    } else {
        (false, format!("({})*{}", c, body))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.display_order().into_iter().enumerate() {
            let body = if w.is_empty() { String::new() } else { fmt_word(&self.pres, w) };
            let (neg, rendered) = fmt_coefficient_term(c, &body);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", rendered)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    /// Two generators with `g1·g0 = g0·g1 − iλ·g1` (the coordinate-algebra rule).
    fn toy() -> Arc<Presentation> {
        let mut b = Presentation::builder("toy");
        let g0 = b.generator("x0");
        let g1 = b.generator("x1");
        b.swap_rule(g1, g0, vec![(vec![g1], -&Scalar::i_lambda())]);
        b.build()
    }

    #[test]
    fn single_swap() {
        let p = toy();
        let e = Element::normalize(&p, vec![(vec![1, 0], Scalar::one())]).unwrap();
        assert_eq!(e.coefficient(&[0, 1]), Scalar::one());
        assert_eq!(e.coefficient(&[1]), -&Scalar::i_lambda());
        assert_eq!(e.term_count(), 2);
    }

    #[test]
    fn reduction_order_is_irrelevant() {
        let p = toy();
        let raw = vec![(vec![1, 1, 0, 1, 0], Scalar::i()), (vec![1, 0, 0], Scalar::one())];
        let a = Element::normalize_with(&p, raw.clone(), ReductionOrder::LeftmostInversion).unwrap();
        let b = Element::normalize_with(&p, raw, ReductionOrder::RightmostInversion).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn idempotent_normalization() {
        let p = toy();
        let e = Element::normalize(&p, vec![(vec![1, 0, 1, 0], Scalar::one())]).unwrap();
        let again = Element::normalize(
            &p,
            e.terms().map(|(w, c)| (w.clone(), c.clone())).collect(),
        )
        .unwrap();
        assert_eq!(e, again);
    }

    #[test]
    fn product_difference_of_squares() {
        // (x0 + x1)(x0 − x1) = x0² − x1² − iλ·x1
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let prod = &(&x0 + &x1) * &(&x0 - &x1);
        let mut expected = Element::normalize(
            &p,
            vec![
                (vec![0, 0], Scalar::one()),
                (vec![1, 1], -&Scalar::one()),
                (vec![1], -&Scalar::i_lambda()),
            ],
        )
        .unwrap();
        assert_eq!(prod, expected);
        // and the product is associative with a third factor
        let left = &prod * &x1;
        expected = &(&x0 + &x1) * &(&(&x0 - &x1) * &x1);
        assert_eq!(left, expected);
    }

    #[test]
    fn unknown_generator_rejected() {
        let p = toy();
        let err = Element::normalize(&p, vec![(vec![7], Scalar::one())]).unwrap_err();
        assert_eq!(err, EngineError::UnknownGenerator(7));
    }

    #[test]
    fn normal_word_enumeration_counts() {
        let p = toy();
        // multisets of size d from 2 symbols: d+1
        for d in 0..5 {
            assert_eq!(p.normal_words(d).len(), d + 1);
        }
    }

    #[test]
    fn termination_audit_rejects_nondecreasing_correction() {
        let mut b = Presentation::builder("bad");
        let g0 = b.generator("u");
        let g1 = b.generator("v");
        // correction of the same graded measure as the pair itself
        b.swap_rule(g1, g0, vec![(vec![g1, g0], Scalar::one())]);
        let p = Presentation {
            name: b.name.clone(),
            generators: b.generators.clone(),
            swap: b.swap.clone(),
            counit: b.counit.clone(),
            antipode: b.antipode.clone(),
            star: b.star.clone(),
            coproduct: b.coproduct.clone(),
            degree_class: b.degree_class.clone(),
        };
        assert!(p.audit_termination().is_err());
    }

    #[test]
    fn display_round_structure() {
        let p = toy();
        let e = Element::normalize(&p, vec![(vec![1, 0], Scalar::one())]).unwrap();
        assert_eq!(e.to_string(), "x0*x1 - i*k^-1*x1");
        let sq = Element::normalize(&p, vec![(vec![0, 0, 1], Scalar::one())]).unwrap();
        assert_eq!(sq.to_string(), "x0^2*x1");
    }
}

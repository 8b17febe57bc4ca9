//! Tensor products of algebra elements with componentwise multiplication.
//!
//! A [`TensorElement`] is a canonical sum of factor-word tuples; the factor
//! list may mix different presentations (e.g. symmetry algebra ⊗ coordinate
//! algebra), and combinators exist to apply linear maps to a chosen factor,
//! expand one factor into several (coproducts, coactions), collapse adjacent
//! factors by multiplication, and regroup terms by all-but-one factor.

use super::{Element, EngineError, Presentation, RawSum, Word};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct TensorElement {
    factors: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.same_as(b))
            && self.terms == other.terms
    }
}
impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(factors: Vec<Arc<Presentation>>) -> Self {
        assert!(factors.len() >= 2, "tensor elements have at least two factors");
        TensorElement { factors, terms: BTreeMap::new() }
    }

    /// `I ⊗ … ⊗ I`.
    pub fn unit(factors: Vec<Arc<Presentation>>) -> Self {
        let n = factors.len();
        let mut t = Self::zero(factors);
        t.terms.insert(vec![Vec::new(); n], Scalar::one());
        t
    }

    /// Canonicalize a formal sum of factor-word tuples; the words need not be
    /// normal (each factor is normalized independently and products distribute).
    pub fn from_raw(
        factors: Vec<Arc<Presentation>>,
        raw: Vec<(Vec<Word>, Scalar)>,
    ) -> Result<Self, EngineError> {
        let nf = factors.len();
        let mut out = Self::zero(factors);
        for (words, c) in raw {
            if words.len() != nf {
                return Err(EngineError::FactorMismatch(nf, words.len()));
            }
            if c.is_zero() {
                continue;
            }
            // Normalize each component; distribute the resulting sums.
            let mut parts: Vec<Element> = Vec::with_capacity(nf);
            for (i, w) in words.into_iter().enumerate() {
                parts.push(Element::normalize(&out.factors[i], vec![(w, Scalar::one())])?);
            }
            out.add_product_of(&parts, &c);
        }
        Ok(out)
    }

    /// Entrywise *-involution `* ⊗ … ⊗ *`: conjugates every coefficient and
    /// stars each leg in place, without reversing legs — the convention under
    /// which a coproduct is a *-homomorphism.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.factors.clone());
        for (legs, c) in &self.terms {
            let parts: Vec<Element> = legs
                .iter()
                .zip(&self.factors)
                .map(|(w, p)| {
                    Element::normalize(p, vec![(w.clone(), Scalar::one())])
                        .expect("normal words renormalize")
                        .star()
                })
                .collect();
            out.add_product_of(&parts, &c.conj());
        }
        out
    }

    /// Reorder the factors: output factor `k` is input factor `perm[k]`.
    /// Purely positional — every leg is already normal, so no renormalization
    /// happens and coefficients are untouched.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.factors.len(), "permutation length mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < seen.len() && !seen[p], "not a permutation of the factors");
            seen[p] = true;
        }
        let factors: Vec<_> = perm.iter().map(|&p| self.factors[p].clone()).collect();
        let mut out = Self::zero(factors);
        for (legs, c) in &self.terms {
            let moved: Vec<Word> = perm.iter().map(|&p| legs[p].clone()).collect();
            out.insert_add(moved, c.clone());
        }
        out
    }

    /// Outer product `a ⊗ b`.
    pub fn outer(a: &Element, b: &Element) -> Self {
        let mut t = Self::zero(vec![a.presentation().clone(), b.presentation().clone()]);
        t.add_product_of(&[a.clone(), b.clone()], &Scalar::one());
        t
    }

    fn add_product_of(&mut self, parts: &[Element], c: &Scalar) {
        // Cartesian product over the terms of each factor element.
        let mut stack: Vec<(Vec<Word>, Scalar)> = vec![(Vec::with_capacity(parts.len()), c.clone())];
        for part in parts {
            let mut next = Vec::with_capacity(stack.len() * part.term_count().max(1));
            for (tuple, coeff) in &stack {
                for (w, wc) in part.terms() {
                    let mut t = tuple.clone();
                    t.push(w.clone());
                    next.push((t, coeff * wc));
                }
            }
            stack = next;
        }
        for (tuple, coeff) in stack {
            self.insert_add(tuple, coeff);
        }
    }

    fn insert_add(&mut self, tuple: Vec<Word>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(tuple) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Arc<Presentation>] {
        &self.factors
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.factors.clone());
        }
        TensorElement {
            factors: self.factors.clone(),
            terms: self.terms.iter().map(|(t, k)| (t.clone(), k * c)).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), EngineError> {
        if self.factors.len() != other.factors.len()
            || self
                .factors
                .iter()
                .zip(&other.factors)
                .any(|(a, b)| !a.same_as(b))
        {
            return Err(EngineError::PresentationMismatch(
                self.factors.iter().map(|p| p.name()).collect::<Vec<_>>().join("⊗"),
                other.factors.iter().map(|p| p.name()).collect::<Vec<_>>().join("⊗"),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, EngineError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.insert_add(t.clone(), c.clone());
        }
        Ok(out)
    }

    /// Componentwise product `(a₁⊗…⊗a_k)(b₁⊗…⊗b_k) = a₁b₁⊗…⊗a_k b_k`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, EngineError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.factors.clone());
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                let parts: Vec<Element> = ta
                    .iter()
                    .zip(tb)
                    .enumerate()
                    .map(|(i, (wa, wb))| {
                        let mut w = Vec::with_capacity(wa.len() + wb.len());
                        w.extend_from_slice(wa);
                        w.extend_from_slice(wb);
                        Element::normalize(&self.factors[i], vec![(w, Scalar::one())])
                            .expect("words already validated")
                    })
                    .collect();
                out.add_product_of(&parts, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Apply a linear map to one factor; the map may land in a different
    /// presentation (`target` names the new factor's presentation).
    pub fn map_factor(
        &self,
        factor: usize,
        target: &Arc<Presentation>,
        f: impl Fn(&Element) -> Element,
    ) -> Self {
        let mut factors = self.factors.clone();
        factors[factor] = target.clone();
        let mut out = Self::zero(factors);
        for (tuple, c) in &self.terms {
            let arg = Element::normalize(
                &self.factors[factor],
                vec![(tuple[factor].clone(), Scalar::one())],
            )
            .expect("canonical word");
            let image = f(&arg);
            for (w, wc) in image.terms() {
                let mut t = tuple.clone();
                t[factor] = w.clone();
                out.insert_add(t, c * wc);
            }
        }
        out
    }

    /// Apply a scalar-valued linear map (e.g. a counit) to one factor,
    /// removing it from the tensor. The result keeps the remaining factors.
    pub fn map_factor_scalar(&self, factor: usize, f: impl Fn(&Element) -> Scalar) -> Self {
        let mut factors = self.factors.clone();
        factors.remove(factor);
        assert!(
            factors.len() >= 2,
            "use collapse_to_element when only one factor would remain"
        );
        let mut out = Self::zero(factors);
        for (tuple, c) in &self.terms {
            let arg = Element::normalize(
                &self.factors[factor],
                vec![(tuple[factor].clone(), Scalar::one())],
            )
            .expect("canonical word");
            let v = f(&arg);
            if v.is_zero() {
                continue;
            }
            let mut t = tuple.clone();
            t.remove(factor);
            out.insert_add(t, &v * c);
        }
        out
    }

    /// Like [`map_factor_scalar`] but for two-factor tensors, producing an Element.
    pub fn collapse_to_element(&self, factor: usize, f: impl Fn(&Element) -> Scalar) -> Element {
        assert_eq!(self.factors.len(), 2, "collapse_to_element needs exactly two factors");
        let keep = 1 - factor;
        let mut raw: RawSum = Vec::new();
        for (tuple, c) in &self.terms {
            let arg = Element::normalize(
                &self.factors[factor],
                vec![(tuple[factor].clone(), Scalar::one())],
            )
            .expect("canonical word");
            let v = f(&arg);
            if !v.is_zero() {
                raw.push((tuple[keep].clone(), &v * c));
            }
        }
        Element::normalize(&self.factors[keep], raw).expect("canonical word")
    }

    /// Replace one factor by the (multi-factor) image of a linear map, e.g.
    /// a coproduct or coaction applied to that slot.
    pub fn expand_factor(&self, factor: usize, f: impl Fn(&Element) -> TensorElement) -> Self {
        let mut out: Option<TensorElement> = None;
        for (tuple, c) in &self.terms {
            let arg = Element::normalize(
                &self.factors[factor],
                vec![(tuple[factor].clone(), Scalar::one())],
            )
            .expect("canonical word");
            let image = f(&arg);
            let out_ref = out.get_or_insert_with(|| {
                let mut factors = self.factors.clone();
                factors.splice(factor..=factor, image.factors.iter().cloned());
                TensorElement::zero(factors)
            });
            for (img_tuple, img_c) in &image.terms {
                let mut t = Vec::with_capacity(tuple.len() - 1 + img_tuple.len());
                t.extend_from_slice(&tuple[..factor]);
                t.extend(img_tuple.iter().cloned());
                t.extend_from_slice(&tuple[factor + 1..]);
                out_ref.insert_add(t, c * img_c);
            }
        }
        out.unwrap_or_else(|| {
            // Zero tensor: factor expansion shape is unknowable without the map;
            // leave the factor in place (a zero tensor stays zero).
            self.clone()
        })
    }

    /// Multiply factors `factor` and `factor+1` together (same presentation).
    pub fn collapse_mul(&self, factor: usize) -> Self {
        assert!(
            self.factors[factor].same_as(&self.factors[factor + 1]),
            "can only multiply adjacent factors over the same presentation"
        );
        let mut factors = self.factors.clone();
        factors.remove(factor + 1);
        if factors.len() < 2 {
            panic!("use collapse_mul_to_element for two-factor tensors");
        }
        let mut out = Self::zero(factors);
        for (tuple, c) in &self.terms {
            let mut w = Vec::with_capacity(tuple[factor].len() + tuple[factor + 1].len());
            w.extend_from_slice(&tuple[factor]);
            w.extend_from_slice(&tuple[factor + 1]);
            let prod =
                Element::normalize(&self.factors[factor], vec![(w, Scalar::one())]).unwrap();
            for (pw, pc) in prod.terms() {
                let mut t = Vec::with_capacity(tuple.len() - 1);
                t.extend_from_slice(&tuple[..factor]);
                t.push(pw.clone());
                t.extend_from_slice(&tuple[factor + 2..]);
                out.insert_add(t, c * pc);
            }
        }
        out
    }

    /// Multiply the two factors of a two-factor tensor into a plain element.
    pub fn collapse_mul_to_element(&self) -> Element {
        assert_eq!(self.factors.len(), 2);
        assert!(self.factors[0].same_as(&self.factors[1]));
        let mut raw: RawSum = Vec::new();
        for (tuple, c) in &self.terms {
            let mut w = Vec::with_capacity(tuple[0].len() + tuple[1].len());
            w.extend_from_slice(&tuple[0]);
            w.extend_from_slice(&tuple[1]);
            raw.push((w, c.clone()));
        }
        Element::normalize(&self.factors[0], raw).expect("canonical words")
    }

    /// Embed into a larger tensor by placing the factors at `slots` and the
    /// identity everywhere else. `target` lists the presentations of the result.
    pub fn embed(&self, slots: &[usize], target: Vec<Arc<Presentation>>) -> Self {
        assert_eq!(slots.len(), self.factors.len());
        for (i, &s) in slots.iter().enumerate() {
            assert!(target[s].same_as(&self.factors[i]), "slot presentation mismatch");
        }
        let n = target.len();
        let mut out = Self::zero(target);
        for (tuple, c) in &self.terms {
            let mut t = vec![Vec::new(); n];
            for (i, w) in tuple.iter().enumerate() {
                t[slots[i]] = w.clone();
            }
            out.insert_add(t, c.clone());
        }
        out
    }

    /// Group terms by the words at every factor except `factor`; the values
    /// are the `factor`-components as elements. Adjacent-factor structure is
    /// lost, which is exactly what coefficient-wise comparisons need.
    pub fn split_factor(&self, factor: usize) -> BTreeMap<Vec<Word>, Element> {
        let mut out: BTreeMap<Vec<Word>, RawSum> = BTreeMap::new();
        for (tuple, c) in &self.terms {
            let mut key = tuple.clone();
            let w = key.remove(factor);
            out.entry(key).or_default().push((w, c.clone()));
        }
        out.into_iter()
            .map(|(k, raw)| {
                (
                    k,
                    Element::normalize(&self.factors[factor], raw).expect("canonical words"),
                )
            })
            .collect()
    }
}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.checked_add(rhs).expect("factor mismatch in +")
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.checked_add(&-rhs).expect("factor mismatch in -")
    }
}

impl std::ops::Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.checked_mul(rhs).expect("factor mismatch in *")
    }
}

impl std::ops::Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            factors: self.factors.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(ta, _), (tb, _)| {
            let da: usize = ta.iter().map(|w| w.len()).sum();
            let db: usize = tb.iter().map(|w| w.len()).sum();
            db.cmp(&da).then_with(|| ta.cmp(tb))
        });
        for (idx, (tuple, c)) in ordered.into_iter().enumerate() {
            let body = tuple
                .iter()
                .enumerate()
                .map(|(i, w)| super::fmt_word(&self.factors[i], w))
                .collect::<Vec<_>>()
                .join(" (x) ");
            let (neg, rendered) = super::fmt_coefficient_term(c, &body);
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

impl Element {
    /// Coproduct, extended multiplicatively over words using the
    /// per-generator table.
    pub fn coproduct(&self) -> TensorElement {
        let pres = self.presentation();
        let factors = vec![pres.clone(), pres.clone()];
        let mut out = TensorElement::zero(factors.clone());
        for (w, c) in self.terms() {
            // Fold Δ(g₁)…Δ(g_k) as raw two-sided words, normalize at the end.
            let mut acc: Vec<(Word, Word, Scalar)> =
                vec![(Vec::new(), Vec::new(), c.clone())];
            for &g in w {
                let table = &pres.coproduct[g as usize];
                let mut next = Vec::with_capacity(acc.len() * table.len());
                for (l, r, k) in &acc {
                    for (tl, tr, tc) in table {
                        let mut nl = l.clone();
                        nl.extend_from_slice(tl);
                        let mut nr = r.clone();
                        nr.extend_from_slice(tr);
                        next.push((nl, nr, k * tc));
                    }
                }
                acc = next;
            }
            for (l, r, k) in acc {
                let le = Element::normalize(pres, vec![(l, Scalar::one())]).unwrap();
                let re = Element::normalize(pres, vec![(r, Scalar::one())]).unwrap();
                for (lw, lc) in le.terms() {
                    for (rw, rc) in re.terms() {
                        out.insert_add(vec![lw.clone(), rw.clone()], &(&k * lc) * rc);
                    }
                }
            }
        }
        out
    }

    /// Apply the coproduct table to a raw (possibly non-normal) sum. Used to
    /// check that the coproduct respects the defining relations.
    pub fn coproduct_of_raw(pres: &Arc<Presentation>, raw: &RawSum) -> TensorElement {
        let mut out = TensorElement::zero(vec![pres.clone(), pres.clone()]);
        for (w, c) in raw {
            let mut acc: Vec<(Word, Word, Scalar)> = vec![(Vec::new(), Vec::new(), c.clone())];
            for &g in w {
                let table = &pres.coproduct[g as usize];
                let mut next = Vec::with_capacity(acc.len() * table.len());
                for (l, r, k) in &acc {
                    for (tl, tr, tc) in table {
                        let mut nl = l.clone();
                        nl.extend_from_slice(tl);
                        let mut nr = r.clone();
                        nr.extend_from_slice(tr);
                        next.push((nl, nr, k * tc));
                    }
                }
                acc = next;
            }
            for (l, r, k) in acc {
                let le = Element::normalize(pres, vec![(l, Scalar::one())]).unwrap();
                let re = Element::normalize(pres, vec![(r, Scalar::one())]).unwrap();
                for (lw, lc) in le.terms() {
                    for (rw, rc) in re.terms() {
                        out.insert_add(vec![lw.clone(), rw.clone()], &(&k * lc) * rc);
                    }
                }
            }
        }
        out
    }

    /// Counit applied via table to a raw sum (for relation checks).
    pub fn counit_of_raw(pres: &Arc<Presentation>, raw: &RawSum) -> Scalar {
        let mut out = Scalar::zero();
        for (w, c) in raw {
            let mut e = c.clone();
            for &g in w {
                e *= &pres.counit[g as usize];
                if e.is_zero() {
                    break;
                }
            }
            out += &e;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn toy() -> Arc<Presentation> {
        let mut b = Presentation::builder("toy-tensor");
        let g0 = b.generator("x0");
        let g1 = b.generator("x1");
        b.swap_rule(g1, g0, vec![(vec![g1], -&Scalar::i_lambda())]);
        b.build()
    }

    #[test]
    fn primitive_coproduct_of_product() {
        // Δ(x0·x1) = I⊗x0x1 + x0⊗x1 + x1⊗x0 + x0x1⊗I (componentwise product
        // of the primitive coproducts; no cross corrections at this degree).
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let d = (&x0 * &x1).coproduct();
        let expected = TensorElement::from_raw(
            vec![p.clone(), p.clone()],
            vec![
                (vec![vec![], vec![0, 1]], Scalar::one()),
                (vec![vec![0], vec![1]], Scalar::one()),
                (vec![vec![1], vec![0]], Scalar::one()),
                (vec![vec![0, 1], vec![]], Scalar::one()),
            ],
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_is_homomorphism() {
        let p = toy();
        let a = Element::normalize(&p, vec![(vec![1, 0], Scalar::one())]).unwrap();
        let b = Element::normalize(&p, vec![(vec![0, 1, 1], Scalar::i())]).unwrap();
        let lhs = (&a * &b).coproduct();
        let rhs = &a.coproduct() * &b.coproduct();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn expand_and_collapse_roundtrip() {
        let p = toy();
        let a = Element::normalize(&p, vec![(vec![0, 1], Scalar::one())]).unwrap();
        let t = TensorElement::outer(&a, &Element::unit(&p));
        // (ε⊗id⊗id)∘(Δ⊗id) = id⊗id
        let expanded = t.expand_factor(0, |e| e.coproduct());
        assert_eq!(expanded.factor_count(), 3);
        let back = expanded.map_factor_scalar(0, |e| e.counit());
        assert_eq!(back, t);
    }

    #[test]
    fn split_factor_groups_components() {
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let t = &TensorElement::outer(&x0, &x1) - &TensorElement::outer(&x1, &x0);
        let split = t.split_factor(0);
        assert_eq!(split.len(), 2);
        assert_eq!(split.get(&vec![vec![1u16]]).unwrap(), &x0);
        assert_eq!(split.get(&vec![vec![0u16]]).unwrap(), &-&x1);
    }

    #[test]
    fn embed_places_identity() {
        let p = toy();
        let x0 = Element::generator(&p, 0);
        let x1 = Element::generator(&p, 1);
        let t = TensorElement::outer(&x0, &x1);
        let e = t.embed(&[0, 2], vec![p.clone(), p.clone(), p.clone()]);
        let expected = TensorElement::from_raw(
            vec![p.clone(), p.clone(), p.clone()],
            vec![(vec![vec![0], vec![], vec![1]], Scalar::one())],
        )
        .unwrap();
        assert_eq!(e, expected);
    }
}

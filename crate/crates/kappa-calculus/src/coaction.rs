//! The left coaction of the symmetry algebra on the coordinate algebra.
//!
//! The coordinate generators transform affinely, `x^μ ↦ Σ_ν Λ^μ_ν ⊗ x^ν +
//! a^μ ⊗ I`, and the map extends multiplicatively — exactly, because the
//! images reproduce the coordinate commutators on the nose. On top of that
//! sit the lift to the universal first-order bimodule (two-leg tensors whose
//! legs multiply to zero), the canonical one-form map `ω(v) = Σ S(v₍₁₎) ⊗
//! v₍₂₎` on the counit kernel, the projection back onto coordinates, and the
//! coordinate algebra's own left/right self-coactions given by its coproduct.
//!
//! Everything here is exact except where a matrix–matrix product appears in
//! a symmetry-algebra leg; those comparisons reduce the leg modulo the
//! truncated span of the orthogonality quadrics first, mirroring how the
//! antipode of the matrix part is only an inverse modulo those quadrics.

use crate::engine::{
    random_element, Element, EngineError, Gen, Presentation, RawSum, SampleCfg, TensorElement,
    Word,
};
use crate::minkowski::{Metric, Minkowski};
use crate::poincare::Poincare;
use crate::report::Check;
use crate::scalar::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// An element of the universal first-order bimodule over the coordinate
/// algebra: a two-leg tensor `Σ u_k ⊗ v_k` with `Σ u_k·v_k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalBimoduleElement {
    value: TensorElement,
}

impl UniversalBimoduleElement {
    /// Wrap a two-leg tensor, verifying that its legs multiply to zero.
    pub fn new(value: TensorElement) -> Result<Self, EngineError> {
        if value.factor_count() != 2 {
            return Err(EngineError::FactorMismatch(2, value.factor_count()));
        }
        if !value.factors()[0].same_as(&value.factors()[1]) {
            return Err(EngineError::PresentationMismatch(
                value.factors()[0].name().to_string(),
                value.factors()[1].name().to_string(),
            ));
        }
        if !value.collapse_mul_to_element().is_zero() {
            return Err(EngineError::NotUniversal);
        }
        Ok(UniversalBimoduleElement { value })
    }

    fn wrap(value: TensorElement) -> Self {
        debug_assert!(value.collapse_mul_to_element().is_zero());
        UniversalBimoduleElement { value }
    }

    pub fn value(&self) -> &TensorElement {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Left module action: `x·(u ⊗ v) = xu ⊗ v`.
    pub fn left_mul(&self, x: &Element) -> Self {
        let pres = self.value.factors()[0].clone();
        Self::wrap(self.value.map_factor(0, &pres, |e| x * e))
    }

    /// Right module action: `(u ⊗ v)·x = u ⊗ vx`.
    pub fn right_mul(&self, x: &Element) -> Self {
        let pres = self.value.factors()[1].clone();
        Self::wrap(self.value.map_factor(1, &pres, |e| e * x))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, EngineError> {
        Ok(Self::wrap(self.value.checked_add(&other.value)?))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::wrap(self.value.scale(c))
    }
}

/// The coordinate algebra together with the symmetry algebra coacting on it
/// from the left, both over the same metric.
pub struct Coaction {
    mink: Minkowski,
    poin: Poincare,
    /// Generator images `Σ_ν Λ^μ_ν ⊗ x^ν + a^μ ⊗ I`.
    images: Vec<TensorElement>,
}

impl Coaction {
    pub fn new(metric: Metric) -> Result<Coaction, EngineError> {
        let mink = Minkowski::new(metric.clone())?;
        let poin = Poincare::new(metric)?;
        let n = mink.dim();
        let pair = vec![poin.presentation().clone(), mink.presentation().clone()];
        let mut images = Vec::with_capacity(n);
        for mu in 0..n {
            let mut raw: Vec<(Vec<Word>, Scalar)> = (0..n)
                .map(|nu| {
                    (
                        vec![vec![poin.lam_idx(mu, nu)], vec![nu as Gen]],
                        Scalar::one(),
                    )
                })
                .collect();
            raw.push((vec![vec![poin.a_idx(mu)], Vec::new()], Scalar::one()));
            images.push(TensorElement::from_raw(pair.clone(), raw)?);
        }
        Ok(Coaction { mink, poin, images })
    }

    pub fn mink(&self) -> &Minkowski {
        &self.mink
    }

    pub fn poin(&self) -> &Poincare {
        &self.poin
    }

    pub fn dim(&self) -> usize {
        self.mink.dim()
    }

    fn pair(&self) -> Vec<Arc<Presentation>> {
        vec![
            self.poin.presentation().clone(),
            self.mink.presentation().clone(),
        ]
    }

    fn rho_word(&self, w: &Word) -> TensorElement {
        let mut out = TensorElement::unit(self.pair());
        for &g in w {
            out = out
                .checked_mul(&self.images[g as usize])
                .expect("images share the coaction factor layout");
        }
        out
    }

    /// The coaction itself: the multiplicative extension of the affine
    /// generator images. Exact — the images satisfy the coordinate
    /// commutators identically, so normal ordering commutes with the map.
    pub fn rho_l(&self, e: &Element) -> TensorElement {
        let mut out = TensorElement::zero(self.pair());
        for (w, c) in e.terms() {
            out = out
                .checked_add(&self.rho_word(w).scale(c))
                .expect("fixed factor layout");
        }
        out
    }

    /// The coaction applied to an unnormalized formal sum, letter by letter.
    /// Agreeing with [`Self::rho_l`] after normalization is precisely the
    /// statement that the coaction respects the defining relations.
    pub fn rho_l_raw(&self, raw: &RawSum) -> TensorElement {
        let mut out = TensorElement::zero(self.pair());
        for (w, c) in raw {
            out = out
                .checked_add(&self.rho_word(w).scale(c))
                .expect("fixed factor layout");
        }
        out
    }

    /// The universal differential `D a = I ⊗ a − a ⊗ I`.
    pub fn universal_d(&self, a: &Element) -> UniversalBimoduleElement {
        let unit = self.mink.unit();
        let value = &TensorElement::outer(&unit, a) - &TensorElement::outer(a, &unit);
        UniversalBimoduleElement::wrap(value)
    }

    /// The canonical one-form map `ω(v) = Σ S(v₍₁₎) ⊗ v₍₂₎`, defined on the
    /// counit kernel, where it lands in the universal bimodule.
    pub fn omega(&self, v: &Element) -> Result<UniversalBimoduleElement, EngineError> {
        if !v.counit().is_zero() {
            return Err(EngineError::NotInCounitKernel);
        }
        let pres = self.mink.presentation().clone();
        let value = v.coproduct().map_factor(0, &pres, |e| e.antipode());
        Ok(UniversalBimoduleElement::wrap(value))
    }

    /// Lift of the coaction to the universal bimodule: coact on both legs
    /// and join the two symmetry factors by multiplication into one leading
    /// leg, giving `Σ p_u p_v ⊗ x_u ⊗ y_v`.
    pub fn lift_rho_l(&self, q: &UniversalBimoduleElement) -> TensorElement {
        self.lift_value(q.value())
    }

    fn lift_value(&self, t: &TensorElement) -> TensorElement {
        if t.is_zero() {
            let mut triple = self.pair();
            triple.push(self.mink.presentation().clone());
            return TensorElement::zero(triple);
        }
        t.expand_factor(0, |e| self.rho_l(e)) // (P, Mu, Mv)
            .expand_factor(2, |e| self.rho_l(e)) // (P, Mu, P, Mv)
            .permute(&[0, 2, 1, 3]) // (P, P, Mu, Mv)
            .collapse_mul(0) // (P, Mu, Mv)
    }

    fn mink_triple(&self) -> Vec<Arc<Presentation>> {
        vec![
            self.mink.presentation().clone(),
            self.mink.presentation().clone(),
            self.mink.presentation().clone(),
        ]
    }

    /// Lift of the coordinate algebra's left self-coaction (its coproduct):
    /// `Σ u₍₁₎v₍₁₎ ⊗ u₍₂₎ ⊗ v₍₂₎`.
    pub fn lift_self_left(&self, q: &UniversalBimoduleElement) -> TensorElement {
        if q.is_zero() {
            return TensorElement::zero(self.mink_triple());
        }
        q.value()
            .expand_factor(0, |e| e.coproduct()) // (u1, u2, Mv)
            .expand_factor(2, |e| e.coproduct()) // (u1, u2, v1, v2)
            .permute(&[0, 2, 1, 3]) // (u1, v1, u2, v2)
            .collapse_mul(0) // (u1·v1, u2, v2)
    }

    /// Lift of the coordinate algebra's right self-coaction:
    /// `Σ u₍₁₎ ⊗ v₍₁₎ ⊗ u₍₂₎v₍₂₎`.
    pub fn lift_self_right(&self, q: &UniversalBimoduleElement) -> TensorElement {
        if q.is_zero() {
            return TensorElement::zero(self.mink_triple());
        }
        q.value()
            .expand_factor(0, |e| e.coproduct()) // (u1, u2, Mv)
            .expand_factor(2, |e| e.coproduct()) // (u1, u2, v1, v2)
            .permute(&[0, 2, 1, 3]) // (u1, v1, u2, v2)
            .collapse_mul(2) // (u1, v1, u2·v2)
    }

    /// The algebra map onto the coordinate algebra: translations go to the
    /// matching coordinate, the matrix part to the identity matrix. Well
    /// defined because it maps every symmetry-algebra relation to a
    /// coordinate-algebra relation (including the orthogonality quadrics,
    /// which it kills outright).
    pub fn project(&self, p: &Element) -> Element {
        let raw: RawSum = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        self.project_raw(&raw)
    }

    /// [`Self::project`] on an unnormalized formal sum.
    pub fn project_raw(&self, raw: &RawSum) -> Element {
        let n = self.dim();
        let mut out: RawSum = Vec::new();
        'term: for (w, c) in raw {
            let mut word: Word = Vec::new();
            for &g in w {
                let g = g as usize;
                if g < n {
                    word.push(g as Gen);
                } else {
                    let k = g - n;
                    if k / n != k % n {
                        // Off-diagonal matrix entry: the term dies.
                        continue 'term;
                    }
                    // Diagonal entry maps to the identity: no letter emitted.
                }
            }
            out.push((word, c.clone()));
        }
        Element::normalize(self.mink.presentation(), out)
            .expect("projection emits coordinate letters only")
    }

    /// Deterministic sample from the universal bimodule: a short sum
    /// `Σ x_i·D(y_i)` with random coordinate elements.
    fn sample_universal(
        &self,
        rng: &mut ChaCha8Rng,
        cfg: &SampleCfg,
        parts: usize,
    ) -> (Vec<(Element, Element)>, UniversalBimoduleElement) {
        let mp = self.mink.presentation();
        let mut pairs = Vec::with_capacity(parts);
        let mut value = TensorElement::zero(vec![mp.clone(), mp.clone()]);
        for _ in 0..parts {
            let x = random_element(mp, rng, cfg);
            let y = random_element(mp, rng, cfg);
            value = &value + &self.universal_d(&y).left_mul(&x).value;
            pairs.push((x, y));
        }
        (pairs, UniversalBimoduleElement::wrap(value))
    }

    /// Verify the coaction axioms, the lift axioms on the universal
    /// bimodule, the projection intertwiners, and the self-coaction mirror
    /// properties. Exact checks throughout, except coassociativity-type
    /// statements whose symmetry-algebra legs are reduced modulo the
    /// orthogonality span first.
    pub fn verify_coaction_suite(
        &self,
        max_degree: usize,
        samples: usize,
        seed: u64,
    ) -> Vec<Check> {
        let mut checks = Vec::new();
        let mp = self.mink.presentation().clone();

        // --- The coaction respects the coordinate commutators, exactly.
        let rels = self.mink.defining_relations();
        let bad: Vec<String> = rels
            .iter()
            .filter(|(_, r)| !self.rho_l_raw(r).is_zero())
            .map(|(name, _)| name.clone())
            .collect();
        checks.push(Check::from_bool(
            "coaction-respects-relations",
            bad.is_empty(),
            format!(
                "all {} coordinate commutators map to zero exactly, no quadric reduction needed",
                rels.len()
            ),
            format!("nonzero image on: {}", bad.join(", ")),
        ));

        let words = self.mink.basis_words(max_degree);
        let word_count = words.len();

        // --- Counit axiom (ε ⊗ id)∘ρ = id, exactly.
        let mut counit_ok = true;
        // --- Coassociativity (id ⊗ ρ)∘ρ = (Δ ⊗ id)∘ρ, modulo quadrics in
        //     the two symmetry legs.
        let mut coassoc_ok = true;
        // --- The lift intertwines the universal differential, exactly.
        let mut lift_d_ok = true;
        // --- Projection intertwiners, exactly.
        let mut proj_coproduct_ok = true;
        // --- Self-coaction invariances of the coordinate differentials.
        let mut self_invariance_ok = true;

        let span_degree = max_degree.max(3);
        let span = self.poin.ortho_span(span_degree);
        let reduce_leg = |t: &TensorElement, leg: usize| {
            t.map_factor(leg, self.poin.presentation(), |e| span.reduce_element(e))
        };

        for w in &words {
            let rho = self.rho_l(w);

            counit_ok &= rho.collapse_to_element(0, |e| e.counit()) == *w;

            let lhs = rho.expand_factor(1, |e| self.rho_l(e));
            let rhs = rho.expand_factor(0, |e| e.coproduct());
            let defect = &lhs - &rhs;
            if !defect.is_zero() {
                coassoc_ok &= reduce_leg(&reduce_leg(&defect, 0), 1).is_zero();
            }

            let d = self.universal_d(w);
            let lifted = self.lift_rho_l(&d);
            let expected = rho.expand_factor(1, |e| self.universal_d(e).value().clone());
            lift_d_ok &= lifted == expected;

            proj_coproduct_ok &= {
                let pres = mp.clone();
                let projected = rho.map_factor(0, &pres, |e| self.project(e));
                projected == w.coproduct()
            };

            // Self-coaction lifts of D a: left lift gives I ⊗ D a, right
            // lift gives D a ⊗ I, both exactly — the differentials of the
            // coordinates are bi-invariant under the self-coactions.
            if w.degree() == Some(1) {
                let left = self.lift_self_left(&d);
                let left_expected = d.value().embed(&[1, 2], self.mink_triple());
                let right = self.lift_self_right(&d);
                let right_expected = d.value().embed(&[0, 1], self.mink_triple());
                self_invariance_ok &= left == left_expected && right == right_expected;
            }
        }

        let on_words = |ok: bool, name: &str, what: &str| {
            Check::from_bool(
                name,
                ok,
                format!("{} on all {} basis words up to degree {}", what, word_count, max_degree),
                format!("violated on a basis word of degree ≤ {}", max_degree),
            )
        };
        checks.push(on_words(counit_ok, "coaction-counit", "(ε ⊗ id)∘ρ = id exactly"));
        checks.push(on_words(
            coassoc_ok,
            "coaction-coassociativity",
            "(id ⊗ ρ)∘ρ = (Δ ⊗ id)∘ρ modulo quadrics in the symmetry legs",
        ));
        checks.push(on_words(
            lift_d_ok,
            "lift-derivation",
            "the lift turns D into (id ⊗ D)∘ρ exactly",
        ));
        checks.push(on_words(
            proj_coproduct_ok,
            "projection-recovers-coproduct",
            "(Π ⊗ id)∘ρ equals the coordinate coproduct exactly",
        ));
        checks.push(Check::from_bool(
            "coordinate-forms-invariant",
            self_invariance_ok,
            "D x^μ is left- and right-invariant under the self-coaction lifts",
            "a coordinate differential fails self-coaction invariance",
        ));

        // --- Projection well-definedness: every symmetry relation and every
        //     orthogonality quadric maps to zero in the coordinate algebra.
        let prel = self.poin.defining_relations();
        let bad: Vec<String> = prel
            .iter()
            .filter(|(_, r)| !self.project_raw(r).is_zero())
            .map(|(name, _)| name.clone())
            .collect();
        let quadrics_die = self
            .poin
            .ortho_generators()
            .iter()
            .all(|o| self.project(o).is_zero());
        checks.push(Check::from_bool(
            "projection-well-defined",
            bad.is_empty() && quadrics_die,
            format!(
                "all {} symmetry relations and {} quadrics project to zero",
                prel.len(),
                self.poin.ortho_generators().len()
            ),
            format!(
                "projection fails on: {}{}",
                bad.join(", "),
                if quadrics_die { "" } else { " (and a quadric survives)" }
            ),
        ));

        // --- Projection intertwines the coproducts from the symmetry side.
        let pwords = self.poin.basis_words(max_degree);
        let mut proj_hom_ok = true;
        for p in &pwords {
            let lhs = self.project(p).coproduct();
            let rhs = p
                .coproduct()
                .map_factor(0, &mp, |e| self.project(e))
                .map_factor(1, &mp, |e| self.project(e));
            proj_hom_ok &= lhs == rhs;
        }
        checks.push(Check::from_bool(
            "projection-coproduct",
            proj_hom_ok,
            format!(
                "Δ∘Π = (Π ⊗ Π)∘Δ exactly on all {} symmetry basis words up to degree {}",
                pwords.len(),
                max_degree
            ),
            "projection fails to intertwine the coproducts",
        ));

        // --- Sampled checks on the universal bimodule. Two tiers: the exact
        //     identities run on every sample with quadratic pieces; the
        //     coassociativity-type chains, whose tensor expansions grow
        //     combinatorially with leg degree, run on a smaller slice of
        //     linear-piece samples.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg_wide = SampleCfg {
            max_degree: 2,
            max_terms: 1,
            exponent_range: (0, 1),
        };
        let cfg_narrow = SampleCfg {
            max_degree: 1,
            max_terms: 2,
            exponent_range: (0, 1),
        };
        let mut in_bimodule_ok = true;
        let mut factorization_ok = true;
        let mut lift_counit_ok = true;
        let triple = vec![
            self.poin.presentation().clone(),
            mp.clone(),
            mp.clone(),
        ];
        for _ in 0..samples {
            let (pairs, q) = self.sample_universal(&mut rng, &cfg_wide, 2);
            if q.is_zero() {
                continue;
            }
            let lift = self.lift_rho_l(&q);

            // The lift stays inside (symmetry algebra) ⊗ (universal bimodule).
            in_bimodule_ok &= lift.collapse_mul(1).is_zero();

            // The lift factors through the coaction on sums Σ x_i·D(y_i).
            let mut expected = TensorElement::zero(triple.clone());
            for (x, y) in &pairs {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let part = self
                    .rho_l(y)
                    .expand_factor(1, |e| self.universal_d(e).value().clone());
                let rx = self.rho_l(x).embed(&[0, 1], triple.clone());
                expected = &expected + &rx.checked_mul(&part).expect("layouts agree");
            }
            factorization_ok &= lift == expected;

            // Counit law for the lift.
            lift_counit_ok &= lift.map_factor_scalar(0, |e| e.counit()) == *q.value();
        }

        let deep_samples = samples.min(10);
        let mut product_rule_ok = true;
        let mut lift_coassoc_ok = true;
        let mut self_mirror_ok = true;
        let mut lifts_commute_ok = true;
        let mtriple = self.mink_triple();
        for _ in 0..deep_samples {
            let (_, q) = self.sample_universal(&mut rng, &cfg_narrow, 2);
            if q.is_zero() {
                continue;
            }
            let lift = self.lift_rho_l(&q);

            // Module product rules for the lift, both sides.
            let x = random_element(&mp, &mut rng, &cfg_narrow);
            let rx = self.rho_l(&x);
            let left = self.lift_rho_l(&q.left_mul(&x));
            product_rule_ok &= left
                == rx
                    .embed(&[0, 1], triple.clone())
                    .checked_mul(&lift)
                    .expect("layouts agree");
            let right = self.lift_rho_l(&q.right_mul(&x));
            product_rule_ok &= right
                == lift
                    .checked_mul(&rx.embed(&[0, 2], triple.clone()))
                    .expect("layouts agree");

            // Coassociativity of the lift, modulo quadrics in both symmetry
            // legs.
            let lhs = lift.expand_factor(0, |e| e.coproduct());
            let rhs = lift
                .expand_factor(1, |e| self.rho_l(e)) // (P, P, M, Mv)
                .expand_factor(3, |e| self.rho_l(e)) // (P, P, M, P, M)
                .permute(&[0, 1, 3, 2, 4]) // (P, P, P, M, M)
                .collapse_mul(1); // (P, P, M, M)
            let defect = &lhs - &rhs;
            if !defect.is_zero() {
                lift_coassoc_ok &= reduce_leg(&reduce_leg(&defect, 0), 1).is_zero();
            }

            // Self-coaction mirrors: module product rules, the differential
            // intertwiner, the counit law, and coassociativity — all exact.
            let rlift = self.lift_self_right(&q);
            let dx = x.coproduct();
            self_mirror_ok &= self.lift_self_right(&q.left_mul(&x))
                == dx
                    .embed(&[0, 2], mtriple.clone())
                    .checked_mul(&rlift)
                    .expect("layouts agree");
            self_mirror_ok &= self.lift_self_right(&q.right_mul(&x))
                == rlift
                    .checked_mul(&dx.embed(&[1, 2], mtriple.clone()))
                    .expect("layouts agree");
            self_mirror_ok &= rlift.map_factor_scalar(2, |e| e.counit()) == *q.value();
            let rl_lhs = rlift.expand_factor(2, |e| e.coproduct());
            let rl_rhs = rlift
                .expand_factor(0, |e| e.coproduct()) // (u1, u2, v, H)
                .expand_factor(2, |e| e.coproduct()) // (u1, u2, v1, v2, H)
                .permute(&[0, 2, 1, 3, 4]) // (u1, v1, u2, v2, H)
                .collapse_mul(2); // (u1, v1, u2·v2, H)
            self_mirror_ok &= rl_lhs == rl_rhs;

            // The two self-coaction lifts commute (both produce the middle
            // four-leg expansion), exactly.
            let llift = self.lift_self_left(&q);
            let lhs4 = llift
                .expand_factor(1, |e| e.coproduct()) // (L, u2, u3, v)
                .expand_factor(3, |e| e.coproduct()) // (L, u2, u3, v2, v3)
                .permute(&[0, 1, 3, 2, 4]) // (L, u2, v2, u3, v3)
                .collapse_mul(3); // (L, u2, v2, u3·v3)
            let rhs4 = rlift
                .expand_factor(0, |e| e.coproduct()) // (u1, u2, v, R)
                .expand_factor(2, |e| e.coproduct()) // (u1, u2, v1, v2, R)
                .permute(&[0, 2, 1, 3, 4]) // (u1, v1, u2, v2, R)
                .collapse_mul(0); // (u1·v1, u2, v2, R)
            lifts_commute_ok &= lhs4 == rhs4;
        }
        let on_samples = |ok: bool, count: usize, name: &str, what: &str| {
            Check::from_bool(
                name,
                ok,
                format!("{} on {} sampled bimodule elements", what, count),
                "violated on a sampled bimodule element",
            )
        };
        checks.push(on_samples(
            in_bimodule_ok,
            samples,
            "lift-into-bimodule",
            "the lifted legs still multiply to zero",
        ));
        checks.push(on_samples(
            factorization_ok,
            samples,
            "lift-factorization",
            "the lift of Σ x·D(y) equals Σ ρ(x)·(id ⊗ D)ρ(y) exactly",
        ));
        checks.push(on_samples(
            lift_counit_ok,
            samples,
            "lift-counit",
            "(ε ⊗ id ⊗ id) recovers the bimodule element exactly",
        ));
        checks.push(on_samples(
            product_rule_ok,
            deep_samples,
            "lift-product-rule",
            "the lift intertwines both module actions exactly",
        ));
        checks.push(on_samples(
            lift_coassoc_ok,
            deep_samples,
            "lift-coassociativity",
            "re-coacting equals coproducting the symmetry leg modulo quadrics",
        ));
        checks.push(on_samples(
            self_mirror_ok,
            deep_samples,
            "self-coaction-mirrors",
            "right-handed module rules, differential, counit and coassociativity hold exactly",
        ));
        checks.push(on_samples(
            lifts_commute_ok,
            deep_samples,
            "self-lifts-commute",
            "left and right self-coaction lifts commute exactly",
        ));

        checks
    }

    /// Verify that the symmetric quadratic combinations transform as a
    /// second-order tensor and the trace form is invariant, modulo the
    /// orthogonality span in the symmetry leg.
    pub fn verify_quadratic_covariance(&self) -> Vec<Check> {
        let mut checks = Vec::new();
        let n = self.dim();
        let span = self.poin.ortho_span(2);
        let triple = vec![
            self.poin.presentation().clone(),
            self.mink.presentation().clone(),
            self.mink.presentation().clone(),
        ];

        // Precondition: the combinations are symmetric and counit-free.
        let mut symmetric_ok = true;
        for mu in 0..n {
            for nu in 0..n {
                symmetric_ok &=
                    (&self.mink.x_munu(mu, nu) - &self.mink.x_munu(nu, mu)).is_zero();
                symmetric_ok &= self.mink.x_munu(mu, nu).counit().is_zero();
            }
        }
        checks.push(Check::from_bool(
            "symmetric-combination-precondition",
            symmetric_ok,
            "x^{μν} = x^{νμ} and ε(x^{μν}) = 0 for all pairs",
            "a quadratic combination is asymmetric or misses the counit kernel",
        ));

        // ω of every combination, lifted, against the matrix-squared law.
        let omegas: Vec<Vec<UniversalBimoduleElement>> = (0..n)
            .map(|mu| {
                (0..n)
                    .map(|nu| {
                        self.omega(&self.mink.x_munu(mu, nu))
                            .expect("quadratic combinations live in the counit kernel")
                    })
                    .collect()
            })
            .collect();

        let mut offenders = Vec::new();
        for mu in 0..n {
            for nu in 0..n {
                let lift = self.lift_rho_l(&omegas[mu][nu]);
                let mut expected = TensorElement::zero(triple.clone());
                for (al, row) in omegas.iter().enumerate() {
                    for (be, om) in row.iter().enumerate() {
                        let raw: Vec<(Vec<Word>, Scalar)> = om
                            .value()
                            .terms()
                            .map(|(legs, c)| {
                                (
                                    vec![
                                        vec![
                                            self.poin.lam_idx(mu, al),
                                            self.poin.lam_idx(nu, be),
                                        ],
                                        legs[0].clone(),
                                        legs[1].clone(),
                                    ],
                                    c.clone(),
                                )
                            })
                            .collect();
                        expected = &expected
                            + &TensorElement::from_raw(triple.clone(), raw)
                                .expect("triple layout");
                    }
                }
                let defect = &lift - &expected;
                if !defect.is_zero() {
                    let reduced = defect
                        .map_factor(0, self.poin.presentation(), |e| span.reduce_element(e));
                    if !reduced.is_zero() {
                        offenders.push(format!("({},{})", mu, nu));
                    }
                }
            }
        }
        checks.push(Check::from_bool(
            "quadratic-tensor-covariance",
            offenders.is_empty(),
            format!(
                "ω(x^{{μν}}) transforms with Λ^μ_α Λ^ν_β modulo quadrics for all {} pairs",
                n * n
            ),
            format!("covariance fails at: {}", offenders.join(", ")),
        ));

        // The trace form is invariant: the lift of ω(φ) is I ⊗ ω(φ).
        let om_phi = self
            .omega(&self.mink.phi())
            .expect("the trace element lives in the counit kernel");
        let lift = self.lift_rho_l(&om_phi);
        let expected = om_phi.value().embed(&[1, 2], triple.clone());
        let defect = &lift - &expected;
        let invariant = defect.is_zero()
            || defect
                .map_factor(0, self.poin.presentation(), |e| span.reduce_element(e))
                .is_zero();
        checks.push(Check::from_bool(
            "trace-form-invariance",
            invariant,
            "the lift of ω(φ) is I ⊗ ω(φ) modulo quadrics",
            "the trace form is not invariant",
        ));

        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    fn coaction(n: usize) -> Coaction {
        Coaction::new(Metric::mostly_minus(n)).unwrap()
    }

    #[test]
    fn generator_images_are_affine() {
        let c = coaction(2);
        let expected = TensorElement::from_raw(
            vec![
                c.poin().presentation().clone(),
                c.mink().presentation().clone(),
            ],
            vec![
                (vec![vec![c.poin().lam_idx(0, 0)], vec![0]], Scalar::one()),
                (vec![vec![c.poin().lam_idx(0, 1)], vec![1]], Scalar::one()),
                (vec![vec![c.poin().a_idx(0)], vec![]], Scalar::one()),
            ],
        )
        .unwrap();
        assert_eq!(c.rho_l(&c.mink().x(0)), expected);
        assert_eq!(
            c.rho_l(&c.mink().unit()),
            TensorElement::unit(vec![
                c.poin().presentation().clone(),
                c.mink().presentation().clone(),
            ])
        );
    }

    #[test]
    fn coaction_multiplicative_against_free_expansion() {
        // ρ(x⁰x¹) must match the four-group free expansion
        // Σ Λ⁰_αΛ¹_β ⊗ x^αx^β + Σ Λ⁰_α a¹ ⊗ x^α + Σ a⁰Λ¹_β ⊗ x^β + a⁰a¹ ⊗ I
        // normalized per leg.
        let c = coaction(2);
        let p = c.poin();
        let m = c.mink();
        let mut raw: Vec<(Vec<Word>, Scalar)> = Vec::new();
        for al in 0..2u16 {
            for be in 0..2u16 {
                raw.push((
                    vec![
                        vec![p.lam_idx(0, al as usize), p.lam_idx(1, be as usize)],
                        vec![al, be],
                    ],
                    Scalar::one(),
                ));
            }
        }
        for al in 0..2u16 {
            raw.push((
                vec![vec![p.lam_idx(0, al as usize), p.a_idx(1)], vec![al]],
                Scalar::one(),
            ));
        }
        for be in 0..2u16 {
            raw.push((
                vec![vec![p.a_idx(0), p.lam_idx(1, be as usize)], vec![be]],
                Scalar::one(),
            ));
        }
        raw.push((vec![vec![p.a_idx(0), p.a_idx(1)], vec![]], Scalar::one()));
        let expected = TensorElement::from_raw(
            vec![p.presentation().clone(), m.presentation().clone()],
            raw,
        )
        .unwrap();
        assert_eq!(c.rho_l(&(&m.x(0) * &m.x(1))), expected);
    }

    #[test]
    fn universal_elements_check_their_invariant() {
        let c = coaction(2);
        let m = c.mink();
        let d = c.universal_d(&m.x(0));
        assert!(UniversalBimoduleElement::new(d.value().clone()).is_ok());
        // x ⊗ I alone does not multiply to zero.
        let bad = TensorElement::outer(&m.x(0), &m.unit());
        assert!(matches!(
            UniversalBimoduleElement::new(bad),
            Err(EngineError::NotUniversal)
        ));
        // D(I) = 0.
        assert!(c.universal_d(&m.unit()).is_zero());
    }

    #[test]
    fn omega_on_generators_is_the_differential() {
        let c = coaction(3);
        for mu in 0..3 {
            let x = c.mink().x(mu);
            assert_eq!(c.omega(&x).unwrap(), c.universal_d(&x));
        }
        assert!(matches!(
            c.omega(&c.mink().unit()),
            Err(EngineError::NotInCounitKernel)
        ));
    }

    #[test]
    fn omega_of_trace_element_matches_its_form_presentation() {
        // ω(φ) = D φ − 2 x_μ·D x^μ, exactly, in any dimension.
        for n in 2..=3usize {
            let c = coaction(n);
            let m = c.mink();
            let mut expected = c.universal_d(&m.phi());
            for mu in 0..n {
                let part = c
                    .universal_d(&m.x(mu))
                    .left_mul(&m.x_lower(mu))
                    .scale(&Scalar::from_integer(-2));
                expected = expected.checked_add(&part).unwrap();
            }
            assert_eq!(c.omega(&m.phi()).unwrap(), expected);
        }
    }

    #[test]
    fn projection_values() {
        let c = coaction(2);
        let p = c.poin();
        assert_eq!(c.project(&p.a(0)), c.mink().x(0));
        assert!(c.project(&p.lam(0, 1)).is_zero());
        assert_eq!(c.project(&p.lam(0, 0)), c.mink().unit());
        // A normalized mixed product still projects onto the bare coordinate.
        assert_eq!(c.project(&(&p.lam(0, 0) * &p.a(1))), c.mink().x(1));
        // Quadrics die.
        for o in p.ortho_generators() {
            assert!(c.project(&o).is_zero());
        }
    }

    #[test]
    fn lift_of_coordinate_differentials_rotates() {
        // ρ̃(D x^μ) = Σ_ν Λ^μ_ν ⊗ D x^ν, exactly.
        let c = coaction(2);
        let p = c.poin();
        let m = c.mink();
        let triple = vec![
            p.presentation().clone(),
            m.presentation().clone(),
            m.presentation().clone(),
        ];
        for mu in 0..2 {
            let lift = c.lift_rho_l(&c.universal_d(&m.x(mu)));
            let mut raw: Vec<(Vec<Word>, Scalar)> = Vec::new();
            for nu in 0..2u16 {
                raw.push((
                    vec![vec![p.lam_idx(mu, nu as usize)], vec![], vec![nu]],
                    Scalar::one(),
                ));
                raw.push((
                    vec![vec![p.lam_idx(mu, nu as usize)], vec![nu], vec![]],
                    -&Scalar::one(),
                ));
            }
            let expected = TensorElement::from_raw(triple.clone(), raw).unwrap();
            assert_eq!(lift, expected);
        }
    }

    #[test]
    fn coaction_suite_passes_in_two_dimensions() {
        let c = coaction(2);
        for check in c.verify_coaction_suite(2, 8, 0xC0A) {
            assert_eq!(check.status, CheckStatus::Pass, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn quadratic_covariance_passes_in_two_dimensions() {
        let c = coaction(2);
        for check in c.verify_quadratic_covariance() {
            assert_eq!(check.status, CheckStatus::Pass, "{}: {}", check.name, check.detail);
        }
    }
}

//! The (n+1)-dimensional first-order differential calculus over the
//! coordinate algebra.
//!
//! One-forms are written in left-canonical shape `Σ_b f_b·b` over the
//! invariant basis `{t0, …, t(n−1), tau}`: the coordinate forms `t^μ = d(x^μ)`
//! plus one extra invariant form `tau` that closes the bimodule commutation
//! rules
//!
//! ```text
//! [t^μ, x^ν] = (i/κ)·g^{0μ}·t^ν − (i/κ)·g^{μν}·t^0 + (1/n)·g^{μν}·tau
//! [tau, x^ν] = −(n/κ²)·t^ν
//! ```
//!
//! for the diagonal metric with time sign +1 (the sign the quadratic
//! combinations `x^{μν}` are symmetric under; the rules above are only
//! mutually consistent in that case, which the constructor enforces).
//! The module also provides the differential `d` in degrees 0 and 1, the
//! *-structure `(t^μ)* = t^μ`, `tau* = −tau`, the flip map on two-tensors of
//! forms, wedge products into the ordered exterior basis, the symmetry
//! coaction on forms, and a verification suite that rechecks every rule —
//! including the coaction table — against the universal-bimodule
//! construction from [`crate::coaction`].

use std::collections::BTreeMap;
use std::fmt;

use crate::coaction::{Coaction, UniversalBimoduleElement};
use crate::engine::{fmt_coefficient_term, fmt_word, Element, EngineError, RawSum, TensorElement};
use crate::minkowski::{Metric, Minkowski};
use crate::poincare::Poincare;
use crate::report::Check;
use crate::scalar::Scalar;

/// Basis symbol of the invariant one-forms: `Coord(μ)` is `t^μ = d(x^μ)`,
/// `Trace` is the extra invariant form `tau`
/// (the image of the quadratic invariant under the quotient map).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormSymbol {
    Coord(usize),
    Trace,
}

impl FormSymbol {
    fn label(&self) -> String {
        match self {
            FormSymbol::Coord(mu) => format!("t{mu}"),
            FormSymbol::Trace => "tau".to_string(),
        }
    }
}

impl fmt::Display for FormSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Basis symbol of the exterior square: `CoordPair(μ,ν)` with `μ < ν` is
/// `t^μ∧t^ν`, `TraceCoord(μ)` is `tau∧t^μ`. Antisymmetry is already applied,
/// so these symbols form an ordered basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoFormSymbol {
    CoordPair(usize, usize),
    TraceCoord(usize),
}

impl TwoFormSymbol {
    fn label(&self) -> String {
        match self {
            TwoFormSymbol::CoordPair(mu, nu) => format!("t{mu}^t{nu}"),
            TwoFormSymbol::TraceCoord(mu) => format!("tau^t{mu}"),
        }
    }
}

impl fmt::Display for TwoFormSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Append one rendered `coefficient·symbol` chunk in the same style the
/// element printer uses (sign pulled out of single-term coefficients,
/// multi-term coefficients parenthesized).
fn coefficient_chunk(coeff: &Element, symbol: &str) -> (bool, String) {
    if coeff.term_count() == 1 {
        let (w, c) = coeff.terms().next().expect("nonzero coefficient");
        let body = if w.is_empty() {
            symbol.to_string()
        } else {
            format!("{}*{}", fmt_word(coeff.presentation(), w), symbol)
        };
        fmt_coefficient_term(c, &body)
    } else {
        (false, format!("({coeff})*{symbol}"))
    }
}

fn write_chunks(f: &mut fmt::Formatter<'_>, chunks: &[(bool, String)]) -> fmt::Result {
    if chunks.is_empty() {
        return write!(f, "0");
    }
    for (idx, (neg, rendered)) in chunks.iter().enumerate() {
        if idx == 0 {
            if *neg {
                write!(f, "-")?;
            }
        } else if *neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{rendered}")?;
    }
    Ok(())
}

/// A one-form `Σ_b f_b·b` with left coefficients in the coordinate algebra.
/// Zero coefficients are never stored, so a form is zero iff the map is
/// empty — the basis is free by construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OneForm {
    coeffs: BTreeMap<FormSymbol, Element>,
}

impl OneForm {
    pub fn zero() -> OneForm {
        OneForm { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: FormSymbol) -> Option<&Element> {
        self.coeffs.get(&s)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&FormSymbol, &Element)> {
        self.coeffs.iter()
    }

    /// Add `e·s` into the form, dropping the entry if it cancels.
    pub fn add_term(&mut self, s: FormSymbol, e: Element) {
        if e.is_zero() {
            return;
        }
        match self.coeffs.remove(&s) {
            None => {
                self.coeffs.insert(s, e);
            }
            Some(old) => {
                let merged = &old + &e;
                if !merged.is_zero() {
                    self.coeffs.insert(s, merged);
                }
            }
        }
    }

    pub fn add(&self, other: &OneForm) -> OneForm {
        let mut out = self.clone();
        for (s, e) in other.coefficients() {
            out.add_term(*s, e.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> OneForm {
        let mut out = OneForm::zero();
        for (s, e) in self.coefficients() {
            out.add_term(*s, e.scale(c));
        }
        out
    }

    /// Left module action `a·f`: multiplies every coefficient from the left.
    pub fn left_mul(&self, a: &Element) -> OneForm {
        let mut out = OneForm::zero();
        for (s, e) in self.coefficients() {
            out.add_term(*s, a * e);
        }
        out
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chunks: Vec<_> =
            self.coeffs.iter().map(|(s, e)| coefficient_chunk(e, &s.label())).collect();
        write_chunks(f, &chunks)
    }
}

/// An element of the exterior square, written over the ordered wedge basis
/// with left coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoForm {
    coeffs: BTreeMap<TwoFormSymbol, Element>,
}

impl TwoForm {
    pub fn zero() -> TwoForm {
        TwoForm { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: TwoFormSymbol) -> Option<&Element> {
        self.coeffs.get(&s)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&TwoFormSymbol, &Element)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, s: TwoFormSymbol, e: Element) {
        if e.is_zero() {
            return;
        }
        match self.coeffs.remove(&s) {
            None => {
                self.coeffs.insert(s, e);
            }
            Some(old) => {
                let merged = &old + &e;
                if !merged.is_zero() {
                    self.coeffs.insert(s, merged);
                }
            }
        }
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        let mut out = self.clone();
        for (s, e) in other.coefficients() {
            out.add_term(*s, e.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TwoForm {
        let mut out = TwoForm::zero();
        for (s, e) in self.coefficients() {
            out.add_term(*s, e.scale(c));
        }
        out
    }

    pub fn left_mul(&self, a: &Element) -> TwoForm {
        let mut out = TwoForm::zero();
        for (s, e) in self.coefficients() {
            out.add_term(*s, a * e);
        }
        out
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chunks: Vec<_> =
            self.coeffs.iter().map(|(s, e)| coefficient_chunk(e, &s.label())).collect();
        write_chunks(f, &chunks)
    }
}

/// A two-tensor of one-forms before the exterior quotient: left coefficients
/// on ordered pairs of basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormTensor {
    coeffs: BTreeMap<(FormSymbol, FormSymbol), Element>,
}

impl FormTensor {
    pub fn zero() -> FormTensor {
        FormTensor { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, pair: (FormSymbol, FormSymbol)) -> Option<&Element> {
        self.coeffs.get(&pair)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&(FormSymbol, FormSymbol), &Element)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, pair: (FormSymbol, FormSymbol), e: Element) {
        if e.is_zero() {
            return;
        }
        match self.coeffs.remove(&pair) {
            None => {
                self.coeffs.insert(pair, e);
            }
            Some(old) => {
                let merged = &old + &e;
                if !merged.is_zero() {
                    self.coeffs.insert(pair, merged);
                }
            }
        }
    }

    pub fn add(&self, other: &FormTensor) -> FormTensor {
        let mut out = self.clone();
        for (pair, e) in other.coefficients() {
            out.add_term(*pair, e.clone());
        }
        out
    }
}

/// A one-form with its coefficients pushed through the symmetry coaction:
/// for each basis symbol the coefficient lives in `symmetry ⊗ coordinates`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoactedForm {
    coeffs: BTreeMap<FormSymbol, TensorElement>,
}

impl CoactedForm {
    pub fn zero() -> CoactedForm {
        CoactedForm { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: FormSymbol) -> Option<&TensorElement> {
        self.coeffs.get(&s)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&FormSymbol, &TensorElement)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, s: FormSymbol, t: &TensorElement) {
        if t.is_zero() {
            return;
        }
        match self.coeffs.remove(&s) {
            None => {
                self.coeffs.insert(s, t.clone());
            }
            Some(old) => {
                let merged =
                    old.checked_add(t).expect("coacted-form coefficients share their factors");
                if !merged.is_zero() {
                    self.coeffs.insert(s, merged);
                }
            }
        }
    }
}

impl fmt::Display for CoactedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> =
            self.coeffs.iter().map(|(s, t)| format!("({t}) (x) {s}")).collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// The concrete covariant calculus: owns the symmetry coaction (and through
/// it both algebras) and implements all form-level operations.
pub struct Calculus {
    coact: Coaction,
}

impl Calculus {
    /// Build the calculus over the given diagonal metric. The time sign must
    /// be `+1`: with time sign `−1` the displayed commutation rules fail the
    /// mixed Jacobi consistency `[[b,x^μ],x^ν] − [[b,x^ν],x^μ] = [b,[x^μ,x^ν]]`
    /// by the exact gap `(1 − g^{00})`, so no calculus is constructed.
    pub fn new(metric: Metric) -> Result<Calculus, EngineError> {
        if metric.sign(0) != 1 {
            return Err(EngineError::TimeSignNotPlus);
        }
        Ok(Calculus { coact: Coaction::new(metric)? })
    }

    pub fn dim(&self) -> usize {
        self.mink().dim()
    }

    pub fn metric(&self) -> &Metric {
        self.mink().metric()
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

    /// The `n+1` invariant basis symbols in display order.
    pub fn basis_symbols(&self) -> Vec<FormSymbol> {
        (0..self.dim()).map(FormSymbol::Coord).chain([FormSymbol::Trace]).collect()
    }

    /// The basis one-form `1·s`.
    pub fn one_form(&self, s: FormSymbol) -> OneForm {
        if let FormSymbol::Coord(mu) = s {
            assert!(mu < self.dim(), "coordinate form index out of range");
        }
        let mut out = OneForm::zero();
        out.add_term(s, Element::unit(self.mink().presentation()));
        out
    }

    fn scalar_coeff(&self, c: Scalar) -> Element {
        Element::scalar(self.mink().presentation(), c)
    }

    /// `b·x^ν` for a basis symbol, rewritten to left-canonical shape — the
    /// commutation rules in executable form.
    fn basis_times_generator(&self, b: FormSymbol, nu: usize) -> OneForm {
        let m = self.mink();
        let n = m.dim();
        assert!(nu < n, "coordinate index out of range");
        let il = Scalar::i_lambda();
        let mut out = OneForm::zero();
        match b {
            FormSymbol::Coord(mu) => {
                out.add_term(FormSymbol::Coord(mu), m.x(nu));
                if mu == 0 {
                    // g^{0μ} ≠ 0 only for μ = 0, where it is +1.
                    out.add_term(FormSymbol::Coord(nu), self.scalar_coeff(il.clone()));
                }
                if mu == nu {
                    let s = m.metric().scalar(mu);
                    out.add_term(FormSymbol::Coord(0), self.scalar_coeff(-&(&il * &s)));
                    out.add_term(
                        FormSymbol::Trace,
                        self.scalar_coeff(&s * &Scalar::from_ratio(1, n as i64)),
                    );
                }
            }
            FormSymbol::Trace => {
                out.add_term(FormSymbol::Trace, m.x(nu));
                let c = -&(&Scalar::lambda_pow(2) * &Scalar::from_integer(n as i64));
                out.add_term(FormSymbol::Coord(nu), self.scalar_coeff(c));
            }
        }
        out
    }

    /// `f·x^ν` for a whole form.
    fn form_right_mul_generator(&self, f: &OneForm, nu: usize) -> OneForm {
        let mut out = OneForm::zero();
        for (b, coeff) in f.coefficients() {
            out = out.add(&self.basis_times_generator(*b, nu).left_mul(coeff));
        }
        out
    }

    /// Right module action `f·a`, reduced to left-canonical shape by moving
    /// every word of `a` through the basis symbols letter by letter.
    pub fn right_mul(&self, f: &OneForm, a: &Element) -> OneForm {
        let mut out = OneForm::zero();
        for (b, coeff) in f.coefficients() {
            for (w, c) in a.terms() {
                let mut cur = self.one_form(*b);
                for &g in w {
                    cur = self.form_right_mul_generator(&cur, g as usize);
                }
                out = out.add(&cur.left_mul(coeff).scale(c));
            }
        }
        out
    }

    /// The differential in degree zero: linear, `d(x^μ) = t^μ`, extended by
    /// the product rule with right multiplication pushing coefficients left.
    pub fn d0(&self, a: &Element) -> OneForm {
        let m = self.mink();
        let mut out = OneForm::zero();
        for (w, c) in a.terms() {
            for i in 0..w.len() {
                let prefix =
                    Element::normalize(m.presentation(), vec![(w[..i].to_vec(), Scalar::one())])
                        .expect("subword of a normal word");
                let suffix = Element::normalize(
                    m.presentation(),
                    vec![(w[i + 1..].to_vec(), Scalar::one())],
                )
                .expect("subword of a normal word");
                let start = self.one_form(FormSymbol::Coord(w[i] as usize)).left_mul(&prefix);
                out = out.add(&self.right_mul(&start, &suffix).scale(c));
            }
        }
        out
    }

    /// The product rule applied to a raw (not yet normalized) sum of words —
    /// used to check that the differential kills every defining relation and
    /// therefore descends to the quotient algebra.
    fn d_free_raw(&self, raw: &RawSum) -> OneForm {
        let m = self.mink();
        let mut out = OneForm::zero();
        for (w, c) in raw {
            for i in 0..w.len() {
                let prefix =
                    Element::normalize(m.presentation(), vec![(w[..i].to_vec(), Scalar::one())])
                        .expect("valid word");
                let suffix = Element::normalize(
                    m.presentation(),
                    vec![(w[i + 1..].to_vec(), Scalar::one())],
                )
                .expect("valid word");
                let start = self.one_form(FormSymbol::Coord(w[i] as usize)).left_mul(&prefix);
                out = out.add(&self.right_mul(&start, &suffix).scale(c));
            }
        }
        out
    }

    /// Image of a universal-bimodule element under the quotient map onto the
    /// concrete calculus: `Σ u⊗v ↦ Σ u·d(v)`.
    pub fn form_class(&self, q: &UniversalBimoduleElement) -> OneForm {
        let m = self.mink();
        let mut out = OneForm::zero();
        for (legs, c) in q.value().terms() {
            let u = Element::normalize(m.presentation(), vec![(legs[0].clone(), Scalar::one())])
                .expect("valid word");
            let v = Element::normalize(m.presentation(), vec![(legs[1].clone(), Scalar::one())])
                .expect("valid word");
            out = out.add(&self.d0(&v).left_mul(&u).scale(c));
        }
        out
    }

    /// Checks `d(phi) = tau + 2·x_μ·t^μ` — the identity that pins down the
    /// normalization of the trace form against the quadratic invariant.
    pub fn d_phi_check(&self) -> bool {
        let m = self.mink();
        let lhs = self.d0(&m.phi());
        let mut rhs = self.one_form(FormSymbol::Trace);
        for mu in 0..m.dim() {
            rhs = rhs.add(
                &self
                    .one_form(FormSymbol::Coord(mu))
                    .left_mul(&m.x_lower(mu))
                    .scale(&Scalar::from_integer(2)),
            );
        }
        lhs == rhs
    }

    /// The *-involution on one-forms: `(f_b·b)* = b*·f_b*` with `(t^μ)* = t^μ`
    /// and `tau* = −tau`, re-expressed in left-canonical shape.
    pub fn star_form(&self, f: &OneForm) -> OneForm {
        let mut out = OneForm::zero();
        for (b, coeff) in f.coefficients() {
            let moved = self.right_mul(&self.one_form(*b), &coeff.star());
            let signed = if *b == FormSymbol::Trace {
                moved.scale(&-&Scalar::one())
            } else {
                moved
            };
            out = out.add(&signed);
        }
        out
    }

    /// The two-tensor `f⊗g` with all coefficients pushed to the left
    /// (the second form's coefficients move through the first form's basis
    /// symbols via the commutation rules).
    pub fn form_tensor(&self, f: &OneForm, g: &OneForm) -> FormTensor {
        let mut out = FormTensor::zero();
        for (b1, c1) in f.coefficients() {
            for (b2, c2) in g.coefficients() {
                let moved = self.right_mul(&self.one_form(*b1), c2);
                for (b1p, h) in moved.coefficients() {
                    out.add_term((*b1p, *b2), c1 * h);
                }
            }
        }
        out
    }

    /// The flip on two-tensors of forms: swaps the basis symbols of every
    /// pair and leaves the left coefficient in place. Identical symbols map
    /// to themselves, which is the unique left-linear involutive extension of
    /// the flip table on distinct symbols.
    pub fn sigma(&self, t: &FormTensor) -> FormTensor {
        let mut out = FormTensor::zero();
        for ((b1, b2), c) in t.coefficients() {
            out.add_term((*b2, *b1), c.clone());
        }
        out
    }

    fn tensor_to_two_form(&self, t: &FormTensor) -> TwoForm {
        let mut out = TwoForm::zero();
        for ((b1, b2), c) in t.coefficients() {
            match (*b1, *b2) {
                (FormSymbol::Coord(mu), FormSymbol::Coord(nu)) => {
                    if mu < nu {
                        out.add_term(TwoFormSymbol::CoordPair(mu, nu), c.clone());
                    } else if mu > nu {
                        out.add_term(TwoFormSymbol::CoordPair(nu, mu), -c);
                    }
                }
                (FormSymbol::Trace, FormSymbol::Coord(mu)) => {
                    out.add_term(TwoFormSymbol::TraceCoord(mu), c.clone());
                }
                (FormSymbol::Coord(mu), FormSymbol::Trace) => {
                    out.add_term(TwoFormSymbol::TraceCoord(mu), -c);
                }
                (FormSymbol::Trace, FormSymbol::Trace) => {}
            }
        }
        out
    }

    /// Wedge product: the image of `f⊗g` in the quotient of two-tensors by
    /// the kernel of `id − flip`, expressed over the ordered exterior basis.
    pub fn wedge(&self, f: &OneForm, g: &OneForm) -> TwoForm {
        self.tensor_to_two_form(&self.form_tensor(f, g))
    }

    /// The exterior derivative of the trace form, computed — not transcribed —
    /// from its defining identity `tau = d(phi) − 2·x_μ·d(x^μ)`: applying `d`
    /// once more gives `−2·Σ_μ g_{μμ}·t^μ∧t^μ`, and every summand dies in the
    /// exterior quotient. Any closed-form expression claiming a nonzero value
    /// for `d(tau)` would be inconsistent with `d(t^μ) = 0`.
    pub fn trace_form_derivative(&self) -> TwoForm {
        let m = self.mink();
        let mut out = TwoForm::zero();
        for mu in 0..m.dim() {
            let sq = self.wedge(
                &self.one_form(FormSymbol::Coord(mu)),
                &self.one_form(FormSymbol::Coord(mu)),
            );
            let weight = -&(&Scalar::from_integer(2) * &m.metric().scalar(mu));
            out = out.add(&sq.scale(&weight));
        }
        out
    }

    /// The differential in degree one: `d(f_b·b) = d(f_b)∧b + f_b·d(b)` with
    /// `d(t^μ) = 0` and `d(tau)` given by [`Self::trace_form_derivative`].
    pub fn d1(&self, f: &OneForm) -> TwoForm {
        let dtau = self.trace_form_derivative();
        let mut out = TwoForm::zero();
        for (b, coeff) in f.coefficients() {
            out = out.add(&self.wedge(&self.d0(coeff), &self.one_form(*b)));
            if *b == FormSymbol::Trace {
                out = out.add(&dtau.left_mul(coeff));
            }
        }
        out
    }

    /// The coaction table on basis symbols: `t^μ ↦ Σ_ν Λ^μ_ν ⊗ t^ν`,
    /// `tau ↦ I ⊗ tau`.
    fn coact_table(&self, b: FormSymbol) -> Vec<(Element, FormSymbol)> {
        let p = self.poin();
        match b {
            FormSymbol::Coord(mu) => {
                (0..self.dim()).map(|nu| (p.lam(mu, nu), FormSymbol::Coord(nu))).collect()
            }
            FormSymbol::Trace => vec![(p.unit(), FormSymbol::Trace)],
        }
    }

    /// The symmetry coaction on one-forms: coefficients go through the
    /// coordinate coaction, basis symbols through the rotation table.
    pub fn coact_form(&self, f: &OneForm) -> CoactedForm {
        let m = self.mink();
        let mut out = CoactedForm::zero();
        for (b, coeff) in f.coefficients() {
            let lifted = self.coact.rho_l(coeff);
            for (pelt, sym) in self.coact_table(*b) {
                let factor = TensorElement::outer(&pelt, &Element::unit(m.presentation()));
                let contrib =
                    lifted.checked_mul(&factor).expect("coaction factors share presentations");
                out.add_term(sym, &contrib);
            }
        }
        out
    }

    /// Collapses the symmetry leg of a coacted form with the counit — the
    /// counit axiom sends `coact_form(f)` back to `f`.
    pub fn coacted_counit(&self, cf: &CoactedForm) -> OneForm {
        let mut out = OneForm::zero();
        for (s, t) in cf.coefficients() {
            out.add_term(*s, t.collapse_to_element(0, |e| e.counit()));
        }
        out
    }

    /// Right module action on a coacted form by a coacted coordinate element
    /// `t ∈ symmetry ⊗ coordinates`: basis symbols commute through the
    /// coordinate part, symmetry parts multiply.
    pub fn coacted_right_mul(&self, cf: &CoactedForm, t: &TensorElement) -> CoactedForm {
        let m = self.mink();
        let p = self.poin();
        let mut out = CoactedForm::zero();
        for (b, tcoef) in cf.coefficients() {
            for (legs, c) in t.terms() {
                let q =
                    Element::normalize(p.presentation(), vec![(legs[0].clone(), Scalar::one())])
                        .expect("valid word");
                let a =
                    Element::normalize(m.presentation(), vec![(legs[1].clone(), Scalar::one())])
                        .expect("valid word");
                let moved = self.right_mul(&self.one_form(*b), &a);
                for (bp, h) in moved.coefficients() {
                    let contrib = tcoef
                        .checked_mul(&TensorElement::outer(&q, h))
                        .expect("coaction factors share presentations")
                        .scale(c);
                    out.add_term(*bp, &contrib);
                }
            }
        }
        out
    }

    /// `Σ (P(b1,b1')·P(b2,b2')) at (b1',b2')` — the coaction on a basis
    /// two-tensor, with both symmetry parts multiplied into one coefficient.
    fn basis_pair_coaction(&self, b1: FormSymbol, b2: FormSymbol) -> BTreeMap<(FormSymbol, FormSymbol), Element> {
        let mut out: BTreeMap<(FormSymbol, FormSymbol), Element> = BTreeMap::new();
        for (p1, c1) in self.coact_table(b1) {
            for (p2, c2) in self.coact_table(b2) {
                let prod = &p1 * &p2;
                match out.remove(&(c1, c2)) {
                    None => {
                        if !prod.is_zero() {
                            out.insert((c1, c2), prod);
                        }
                    }
                    Some(old) => {
                        let merged = &old + &prod;
                        if !merged.is_zero() {
                            out.insert((c1, c2), merged);
                        }
                    }
                }
            }
        }
        out
    }

    /// Full verification suite for the calculus: bimodule consistency, the
    /// differential's well-definedness and nilpotency, *-consistency of the
    /// commutation rules, flip/coaction compatibility, bi-invariance of the
    /// basis forms, and agreement of the form coaction with the universal
    /// lift.
    pub fn verify_calculus_suite(&self, max_degree: usize) -> Vec<Check> {
        let m = self.mink();
        let p = self.poin();
        let n = m.dim();
        let mut checks = Vec::new();

        checks.push(Check::from_bool(
            "invariant-basis-dimension",
            self.basis_symbols().len() == n + 1,
            format!("{} coordinate forms plus the trace form: {} basis symbols", n, n + 1),
            "basis symbol count is off",
        ));

        // (a) Mixed Jacobi consistency: acting by x^μ then x^ν agrees with
        // acting by the normalized product x^μ·x^ν, for every basis symbol.
        let mut assoc = true;
        for b in self.basis_symbols() {
            for mu in 0..n {
                for nu in 0..n {
                    let two_step = self.form_right_mul_generator(
                        &self.form_right_mul_generator(&self.one_form(b), mu),
                        nu,
                    );
                    let joined = self.right_mul(&self.one_form(b), &(&m.x(mu) * &m.x(nu)));
                    if two_step != joined {
                        assoc = false;
                    }
                }
            }
        }
        checks.push(Check::from_bool(
            "bimodule-action-consistent",
            assoc,
            format!(
                "(b·x^mu)·x^nu = b·(x^mu·x^nu) for all {} basis symbols and {} generator pairs",
                n + 1,
                n * n
            ),
            "the commutation rules are not mutually consistent",
        ));

        // (b) The differential kills every defining relation of the
        // coordinate algebra, so it is well defined on the quotient.
        let mut respects = true;
        let mut relation_count = 0usize;
        for (_, raw) in m.defining_relations() {
            relation_count += 1;
            if !self.d_free_raw(&raw).is_zero() {
                respects = false;
            }
        }
        checks.push(Check::from_bool(
            "differential-respects-relations",
            respects,
            format!("product-rule image of all {relation_count} defining relations is 0"),
            "the differential does not descend to the quotient algebra",
        ));

        // (c) d∘d = 0 on every basis word up to the requested degree.
        let words = m.basis_words(max_degree);
        let nilpotent = words.iter().all(|w| self.d1(&self.d0(w)).is_zero());
        checks.push(Check::from_bool(
            "differential-squares-to-zero",
            nilpotent,
            format!("d(d(w)) = 0 on all {} basis words of degree <= {}", words.len(), max_degree),
            "d squared is nonzero on some basis word",
        ));

        // (d) Applying * to each commutation rule yields a valid rule:
        // (b·x^nu)* = x^nu·b*.
        let mut starred = true;
        for b in self.basis_symbols() {
            for nu in 0..n {
                let lhs = self.star_form(&self.form_right_mul_generator(&self.one_form(b), nu));
                let rhs = self.star_form(&self.one_form(b)).left_mul(&m.x(nu));
                if lhs != rhs {
                    starred = false;
                }
            }
        }
        checks.push(Check::from_bool(
            "commutation-rules-star-consistent",
            starred,
            "(b·x^nu)* = x^nu·b* for every basis symbol and generator".to_string(),
            "a commutation rule is not *-consistent",
        ));

        // (e) The flip commutes with the doubled coaction on basis
        // two-tensors — exactly, because matrix entries commute.
        let mut flip_ok = true;
        for b1 in self.basis_symbols() {
            for b2 in self.basis_symbols() {
                let rho2 = self.basis_pair_coaction(b1, b2);
                let mut flipped: BTreeMap<(FormSymbol, FormSymbol), Element> = BTreeMap::new();
                for ((c1, c2), e) in rho2 {
                    flipped.insert((c2, c1), e);
                }
                if flipped != self.basis_pair_coaction(b2, b1) {
                    flip_ok = false;
                }
            }
        }
        checks.push(Check::from_bool(
            "flip-commutes-with-coaction",
            flip_ok,
            format!("(id⊗flip)∘coact⊗2 = coact⊗2∘flip on all {} basis pairs, exactly", (n + 1) * (n + 1)),
            "the flip is not compatible with the coaction",
        ));

        // (f) The basis forms are invariant under BOTH self-coactions of the
        // coordinate algebra, exactly at the universal level.
        let triple = vec![m.presentation().clone(); 3];
        let mut invariant = true;
        let mut reps: Vec<UniversalBimoduleElement> =
            (0..n).map(|mu| self.coact.universal_d(&m.x(mu))).collect();
        reps.push(self.coact.omega(&m.phi()).expect("the quadratic invariant has counit 0"));
        for q in &reps {
            let left = self.coact.lift_self_left(q);
            if left != q.value().embed(&[1, 2], triple.clone()) {
                invariant = false;
            }
            let right = self.coact.lift_self_right(q);
            if right != q.value().embed(&[0, 1], triple.clone()) {
                invariant = false;
            }
        }
        checks.push(Check::from_bool(
            "invariant-forms-bi-invariant",
            invariant,
            "representatives of t^mu and tau are exactly left- and right-invariant".to_string(),
            "a basis form fails left or right invariance",
        ));

        checks.push(Check::from_bool(
            "trace-form-from-quadratic-invariant",
            self.d_phi_check(),
            "d(phi) = tau + 2·x_mu·t^mu".to_string(),
            "the trace-form normalization is off",
        ));

        let dtau = self.trace_form_derivative();
        checks.push(Check::from_bool(
            "trace-form-closed",
            dtau.is_zero() && self.d1(&self.one_form(FormSymbol::Trace)).is_zero(),
            "d(tau) = 0".to_string(),
            "d(tau) is nonzero",
        ));
        checks.push(Check::info(
            "trace-form-derivative-note",
            "d(tau) is computed from tau = d(phi) − 2·x_mu·d(x^mu), giving −2·g_mm·t^m∧t^m, \
             which vanishes term by term; a nonzero closed-form value would contradict d(t^mu) = 0",
        ));

        // The coaction table reproduces the universal lift: exactly for the
        // coordinate forms, modulo the orthogonality ideal for the trace form.
        let pmm =
            vec![p.presentation().clone(), m.presentation().clone(), m.presentation().clone()];
        let span2 = p.ortho_span(2);
        let mut table_ok = true;
        for mu in 0..n {
            let lhs = self.coact.lift_rho_l(&self.coact.universal_d(&m.x(mu)));
            let mut rhs = TensorElement::zero(pmm.clone());
            for nu in 0..n {
                let lam = TensorElement::from_raw(
                    pmm.clone(),
                    vec![(vec![vec![p.lam_idx(mu, nu)], Vec::new(), Vec::new()], Scalar::one())],
                )
                .expect("well-shaped row");
                let term = lam
                    .checked_mul(&self.coact.universal_d(&m.x(nu)).value().embed(&[1, 2], pmm.clone()))
                    .expect("matching factors");
                rhs = rhs.checked_add(&term).expect("matching factors");
            }
            if lhs != rhs {
                table_ok = false;
            }
        }
        let omega_phi = self.coact.omega(&m.phi()).expect("counit kernel");
        let lifted = self.coact.lift_rho_l(&omega_phi);
        let expected = omega_phi.value().embed(&[1, 2], pmm.clone());
        let defect = lifted
            .checked_add(&expected.scale(&-&Scalar::one()))
            .expect("matching factors")
            .map_factor(0, p.presentation(), |e| span2.reduce_element(e));
        if !defect.is_zero() {
            table_ok = false;
        }
        checks.push(Check::from_bool(
            "form-coaction-matches-universal-lift",
            table_ok,
            "lift of D(x^mu) rotates by the matrix block exactly; lift of the trace \
             representative is invariant modulo the orthogonality ideal"
                .to_string(),
            "the coaction table disagrees with the universal lift",
        ));

        // Counit axiom on a form with nontrivial coefficients.
        let sample = self
            .one_form(FormSymbol::Coord(n - 1))
            .left_mul(&m.x(0))
            .add(&self.one_form(FormSymbol::Trace).left_mul(&m.x(n - 1)))
            .add(&self.one_form(FormSymbol::Coord(0)).scale(&Scalar::i_lambda()));
        checks.push(Check::from_bool(
            "form-coaction-counit",
            self.coacted_counit(&self.coact_form(&sample)) == sample
                && self
                    .basis_symbols()
                    .into_iter()
                    .all(|b| self.coacted_counit(&self.coact_form(&self.one_form(b))) == self.one_form(b)),
            "counit on the symmetry leg recovers the form".to_string(),
            "the counit axiom fails on forms",
        ));

        // Coassociativity on basis forms, exactly.
        let ppm =
            vec![p.presentation().clone(), p.presentation().clone(), m.presentation().clone()];
        let mut coassoc = true;
        for b in self.basis_symbols() {
            let cf = self.coact_form(&self.one_form(b));
            let mut lhs: BTreeMap<FormSymbol, TensorElement> = BTreeMap::new();
            for (sym, t) in cf.coefficients() {
                lhs.insert(*sym, t.expand_factor(0, |e| e.coproduct()));
            }
            let mut rhs: BTreeMap<FormSymbol, TensorElement> = BTreeMap::new();
            for (p1, b1) in self.coact_table(b) {
                for (p2, b2) in self.coact_table(b1) {
                    let term = TensorElement::outer(&p1, &p2).embed(&[0, 1], ppm.clone());
                    match rhs.remove(&b2) {
                        None => {
                            rhs.insert(b2, term);
                        }
                        Some(old) => {
                            rhs.insert(b2, old.checked_add(&term).expect("matching factors"));
                        }
                    }
                }
            }
            if lhs != rhs {
                coassoc = false;
            }
        }
        checks.push(Check::from_bool(
            "form-coaction-coassociative-on-basis",
            coassoc,
            "doubling the symmetry leg agrees with coacting twice on every basis symbol".to_string(),
            "the form coaction is not coassociative on the basis",
        ));

        // The coaction intertwines the right module action, modulo the
        // orthogonality ideal on the symmetry leg.
        let pair = vec![p.presentation().clone(), m.presentation().clone()];
        let mut intertwines = true;
        for b in self.basis_symbols() {
            let cb = self.coact_form(&self.one_form(b));
            for nu in 0..n {
                let lhs = self.coact_form(&self.form_right_mul_generator(&self.one_form(b), nu));
                let rhs = self.coacted_right_mul(&cb, &self.coact.rho_l(&m.x(nu)));
                for sym in self.basis_symbols() {
                    let zero = TensorElement::zero(pair.clone());
                    let l = lhs.coefficient(sym).unwrap_or(&zero);
                    let r = rhs.coefficient(sym).unwrap_or(&zero);
                    let defect = l
                        .checked_add(&r.scale(&-&Scalar::one()))
                        .expect("matching factors")
                        .map_factor(0, p.presentation(), |e| span2.reduce_element(e));
                    if !defect.is_zero() {
                        intertwines = false;
                    }
                }
            }
        }
        checks.push(Check::from_bool(
            "form-coaction-intertwines-right-action",
            intertwines,
            "coact(b·x^nu) = coact(b)·coact(x^nu) modulo the orthogonality ideal".to_string(),
            "the coaction does not intertwine the right action",
        ));

        // The quotient map sends the universal representatives onto the
        // concrete basis forms.
        let mut quotient_ok = (0..n).all(|mu| {
            self.form_class(&self.coact.universal_d(&m.x(mu))) == self.one_form(FormSymbol::Coord(mu))
        });
        quotient_ok &= self.form_class(&omega_phi) == self.one_form(FormSymbol::Trace);
        checks.push(Check::from_bool(
            "quotient-map-realizes-forms",
            quotient_ok,
            "D(x^mu) maps to t^mu and the trace representative maps to tau".to_string(),
            "the quotient map misses a basis form",
        ));

        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calc(n: usize) -> Calculus {
        Calculus::new(Metric::mostly_minus(n)).unwrap()
    }

    #[test]
    fn constructor_rejects_flipped_time_sign() {
        assert!(matches!(
            Calculus::new(Metric::parse("-++").unwrap()),
            Err(EngineError::TimeSignNotPlus)
        ));
    }

    #[test]
    fn basis_commutation_rules() {
        let c = calc(2);
        let m = c.mink();

        // t0·x0 = x0·t0 + (1/2)·tau
        let got = c.right_mul(&c.one_form(FormSymbol::Coord(0)), &m.x(0));
        let expected = c
            .one_form(FormSymbol::Coord(0))
            .left_mul(&m.x(0))
            .add(&c.one_form(FormSymbol::Trace).scale(&Scalar::from_ratio(1, 2)));
        assert_eq!(got, expected);

        // t1·x0 = x0·t1 (no correction: the mixed metric entries vanish)
        let got = c.right_mul(&c.one_form(FormSymbol::Coord(1)), &m.x(0));
        assert_eq!(got, c.one_form(FormSymbol::Coord(1)).left_mul(&m.x(0)));

        // tau·x1 = x1·tau − 2·λ²·t1
        let got = c.right_mul(&c.one_form(FormSymbol::Trace), &m.x(1));
        let expected = c.one_form(FormSymbol::Trace).left_mul(&m.x(1)).add(
            &c.one_form(FormSymbol::Coord(1))
                .scale(&-&(&Scalar::lambda_pow(2) * &Scalar::from_integer(2))),
        );
        assert_eq!(got, expected);

        // t0·x1 = x1·t0 + iλ·t1
        let got = c.right_mul(&c.one_form(FormSymbol::Coord(0)), &m.x(1));
        let expected = c
            .one_form(FormSymbol::Coord(0))
            .left_mul(&m.x(1))
            .add(&c.one_form(FormSymbol::Coord(1)).scale(&Scalar::i_lambda()));
        assert_eq!(got, expected);

        // t1·x1 = x1·t1 + iλ·t0 − (1/2)·tau  (spatial metric entry −1)
        let got = c.right_mul(&c.one_form(FormSymbol::Coord(1)), &m.x(1));
        let expected = c
            .one_form(FormSymbol::Coord(1))
            .left_mul(&m.x(1))
            .add(&c.one_form(FormSymbol::Coord(0)).scale(&Scalar::i_lambda()))
            .add(&c.one_form(FormSymbol::Trace).scale(&Scalar::from_ratio(-1, 2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn right_action_is_associative_on_samples() {
        let c = calc(3);
        let m = c.mink();
        let a = &(&m.x(1) * &m.x(0)) + &m.x(2).scale(&Scalar::i_lambda());
        let b = &m.x(0) - &m.x(2);
        for sym in c.basis_symbols() {
            let f = c.one_form(sym);
            let stepwise = c.right_mul(&c.right_mul(&f, &a), &b);
            let joined = c.right_mul(&f, &(&a * &b));
            assert_eq!(stepwise, joined);
        }
    }

    #[test]
    fn differential_of_coordinates_and_unit() {
        let c = calc(3);
        let m = c.mink();
        for mu in 0..3 {
            assert_eq!(c.d0(&m.x(mu)), c.one_form(FormSymbol::Coord(mu)));
        }
        assert!(c.d0(&m.unit()).is_zero());
        assert!(c.d0(&m.zero()).is_zero());
    }

    #[test]
    fn differential_of_a_product_prints_canonically() {
        let c = calc(2);
        let m = c.mink();
        let d = c.d0(&(&m.x(0) * &m.x(1)));
        let expected = c
            .one_form(FormSymbol::Coord(0))
            .left_mul(&m.x(1))
            .add(&c.one_form(FormSymbol::Coord(1)).left_mul(&m.x(0)))
            .add(&c.one_form(FormSymbol::Coord(1)).scale(&Scalar::i_lambda()));
        assert_eq!(d, expected);
        assert_eq!(d.to_string(), "x1*t0 + (x0 + i*k^-1)*t1");
    }

    #[test]
    fn trace_form_normalization_across_dimensions() {
        for n in 2..=4 {
            assert!(calc(n).d_phi_check(), "normalization fails at n = {n}");
        }
    }

    #[test]
    fn differential_display_of_quadratic_invariant() {
        let c = calc(2);
        let d = c.d0(&c.mink().phi());
        assert_eq!(d.to_string(), "2*x0*t0 - 2*x1*t1 + tau");
    }

    #[test]
    fn star_on_forms() {
        let c = calc(2);
        let m = c.mink();

        assert_eq!(
            c.star_form(&c.one_form(FormSymbol::Coord(0))),
            c.one_form(FormSymbol::Coord(0))
        );
        let minus_tau = c.one_form(FormSymbol::Trace).scale(&-&Scalar::one());
        assert_eq!(c.star_form(&c.one_form(FormSymbol::Trace)), minus_tau);
        assert_eq!(c.star_form(&c.one_form(FormSymbol::Trace)).to_string(), "-tau");

        // (x1·t0)* = t0·x1 = x1·t0 + iλ·t1
        let f = c.one_form(FormSymbol::Coord(0)).left_mul(&m.x(1));
        let expected =
            f.add(&c.one_form(FormSymbol::Coord(1)).scale(&Scalar::i_lambda()));
        assert_eq!(c.star_form(&f), expected);
    }

    #[test]
    fn star_form_is_involutive() {
        let c = calc(2);
        let m = c.mink();
        let forms = [
            c.one_form(FormSymbol::Coord(0)).left_mul(&m.x(1)),
            c.one_form(FormSymbol::Trace).left_mul(&(&m.x(0) * &m.x(1))),
            c.d0(&(&m.x(0) * &(&m.x(1) * &m.x(1)))),
        ];
        for f in &forms {
            assert_eq!(&c.star_form(&c.star_form(f)), f);
        }
    }

    #[test]
    fn differential_commutes_with_star_on_hermitian_elements() {
        let c = calc(2);
        let m = c.mink();
        for w in m.basis_words(3) {
            let a = &w + &w.star();
            assert_eq!(a.star(), a);
            let d = c.d0(&a);
            assert_eq!(c.star_form(&d), d);
        }
    }

    #[test]
    fn flip_table_and_involution() {
        let c = calc(2);
        let m = c.mink();
        let t0 = c.one_form(FormSymbol::Coord(0));
        let t1 = c.one_form(FormSymbol::Coord(1));
        let tau = c.one_form(FormSymbol::Trace);

        let t = c.form_tensor(&t0, &t1);
        let flipped = c.sigma(&t);
        assert_eq!(flipped, c.form_tensor(&t1, &t0));
        assert_eq!(c.sigma(&flipped), t);

        let tt = c.form_tensor(&tau, &tau);
        assert_eq!(c.sigma(&tt), tt);

        // Left-linearity: coefficients ride along unchanged.
        let with_coeff = c.form_tensor(&t0.left_mul(&m.x(1)), &tau);
        let mut manual = FormTensor::zero();
        manual.add_term((FormSymbol::Trace, FormSymbol::Coord(0)), m.x(1));
        assert_eq!(c.sigma(&with_coeff), manual);
    }

    #[test]
    fn wedge_antisymmetry() {
        let c = calc(2);
        let m = c.mink();
        let t0 = c.one_form(FormSymbol::Coord(0));
        let t1 = c.one_form(FormSymbol::Coord(1));
        let tau = c.one_form(FormSymbol::Trace);

        let mut expected = TwoForm::zero();
        expected.add_term(TwoFormSymbol::CoordPair(0, 1), m.unit());
        assert_eq!(c.wedge(&t0, &t1), expected);
        assert_eq!(c.wedge(&t1, &t0), expected.scale(&-&Scalar::one()));
        assert!(c.wedge(&tau, &tau).is_zero());
        assert!(c.wedge(&t0, &t0).is_zero());
        assert!(c.wedge(&t1, &t1).is_zero());

        // Coefficients move through the first symbol before the quotient:
        // t0 ∧ (x0·t1) = x0·(t0∧t1) + (1/2)·tau∧t1.
        let got = c.wedge(&t0, &t1.left_mul(&m.x(0)));
        let mut expect = TwoForm::zero();
        expect.add_term(TwoFormSymbol::CoordPair(0, 1), m.x(0));
        expect.add_term(TwoFormSymbol::TraceCoord(1), Element::scalar(m.presentation(), Scalar::from_ratio(1, 2)));
        assert_eq!(got, expect);
    }

    #[test]
    fn exterior_derivative_in_degree_one() {
        let c = calc(2);
        let m = c.mink();
        for b in c.basis_symbols() {
            assert!(c.d1(&c.one_form(b)).is_zero(), "basis form {b} is not closed");
        }
        assert!(c.trace_form_derivative().is_zero());

        // d(x0·t1) = t0∧t1.
        let got = c.d1(&c.one_form(FormSymbol::Coord(1)).left_mul(&m.x(0)));
        let mut expected = TwoForm::zero();
        expected.add_term(TwoFormSymbol::CoordPair(0, 1), m.unit());
        assert_eq!(got, expected);
    }

    #[test]
    fn differential_squares_to_zero_on_low_degrees() {
        for n in 2..=3 {
            let c = calc(n);
            for w in c.mink().basis_words(3) {
                assert!(
                    c.d1(&c.d0(&w)).is_zero(),
                    "d² nonzero at n = {n} on {w}"
                );
            }
        }
    }

    #[test]
    fn coaction_of_coefficient_form_matches_hand_expansion() {
        let c = calc(2);
        let m = c.mink();
        let p = c.poin();
        let pair = vec![p.presentation().clone(), m.presentation().clone()];

        let f = c.one_form(FormSymbol::Coord(1)).left_mul(&m.x(0));
        let got = c.coact_form(&f);

        for nu in 0..2 {
            let expected = TensorElement::from_raw(
                pair.clone(),
                vec![
                    (vec![vec![p.lam_idx(0, 0), p.lam_idx(1, nu)], vec![0]], Scalar::one()),
                    (vec![vec![p.lam_idx(0, 1), p.lam_idx(1, nu)], vec![1]], Scalar::one()),
                    (vec![vec![p.a_idx(0), p.lam_idx(1, nu)], Vec::new()], Scalar::one()),
                ],
            )
            .unwrap();
            assert_eq!(got.coefficient(FormSymbol::Coord(nu)), Some(&expected));
        }
        assert_eq!(got.coefficient(FormSymbol::Trace), None);

        // Counit collapses back to the original form.
        assert_eq!(c.coacted_counit(&got), f);
    }

    #[test]
    fn quotient_map_realizes_the_basis() {
        let c = calc(3);
        let m = c.mink();
        for mu in 0..3 {
            assert_eq!(
                c.form_class(&c.coaction().universal_d(&m.x(mu))),
                c.one_form(FormSymbol::Coord(mu))
            );
        }
        let omega_phi = c.coaction().omega(&m.phi()).unwrap();
        assert_eq!(c.form_class(&omega_phi), c.one_form(FormSymbol::Trace));
    }

    #[test]
    fn calculus_suite_passes_in_two_dimensions() {
        let c = calc(2);
        for check in c.verify_calculus_suite(3) {
            assert!(
                !matches!(check.status, crate::report::CheckStatus::Fail),
                "{}: {}",
                check.name,
                check.detail
            );
        }
    }

    #[test]
    fn calculus_suite_passes_in_three_dimensions() {
        let c = calc(3);
        for check in c.verify_calculus_suite(2) {
            assert!(
                !matches!(check.status, crate::report::CheckStatus::Fail),
                "{}: {}",
                check.name,
                check.detail
            );
        }
    }
}

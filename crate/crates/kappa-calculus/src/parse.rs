//! Expression parser for the printed syntax of algebra elements and forms.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := 'x' nat | 'a[' nat ']' | 'L[' nat ',' nat ']'
//!         | 't' nat | 'tau' | 'phi'
//!         | scalar | '(' expr ')'
//! scalar := 'i' | nat ('/' nat)? | 'k' ('^' '-'? nat)?
//! ```
//!
//! `k^-m` denotes the m-th power of the deformation parameter (so `k^1` is
//! its inverse), matching the printers exactly: every `Display` output of an
//! element or a one-form parses back to an equal value. Which atoms are
//! admitted depends on the context: the coordinate algebra knows `x<mu>` and
//! `phi`, the symmetry algebra knows `a[mu]` and `L[mu,nu]`, and the form
//! context adds `t<mu>` and `tau` on top of the coordinate atoms.
use crate::calculus::{Calculus, FormSymbol, OneForm};
use crate::engine::Element;
use crate::minkowski::Minkowski;
use crate::poincare::Poincare;
use crate::scalar::Scalar;
use std::fmt;

/// Syntax or symbol error, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

/// A parsed expression in the form context: either a coefficient (degree
/// zero) or a one-form.
#[derive(Clone, Debug)]
pub enum FormValue {
    Zero(Element),
    One(OneForm),
}

impl fmt::Display for FormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormValue::Zero(e) => write!(f, "{e}"),
            FormValue::One(w) => write!(f, "{w}"),
        }
    }
}

/// Parse an expression of the coordinate algebra (atoms `x<mu>`, `phi`,
/// scalars).
pub fn parse_coordinate_expression(
    mink: &Minkowski,
    text: &str,
) -> Result<Element, ParseError> {
    match Parser::run(Context::Coordinates(mink), text)? {
        FormValue::Zero(e) => Ok(e),
        FormValue::One(_) => unreachable!("form atoms are rejected in this context"),
    }
}

/// Parse an expression of the symmetry algebra (atoms `a[mu]`, `L[mu,nu]`,
/// scalars).
pub fn parse_symmetry_expression(
    poin: &Poincare,
    text: &str,
) -> Result<Element, ParseError> {
    match Parser::run(Context::Symmetry(poin), text)? {
        FormValue::Zero(e) => Ok(e),
        FormValue::One(_) => unreachable!("form atoms are rejected in this context"),
    }
}

/// Parse an expression that may mix coordinate-algebra coefficients with the
/// invariant one-form basis (`t<mu>`, `tau`).
pub fn parse_form_expression(
    calc: &Calculus,
    text: &str,
) -> Result<FormValue, ParseError> {
    Parser::run(Context::Forms(calc), text)
}

#[derive(Clone, Copy)]
enum Context<'c> {
    Coordinates(&'c Minkowski),
    Symmetry(&'c Poincare),
    Forms(&'c Calculus),
}

impl<'c> Context<'c> {
    fn mink(&self) -> Option<&'c Minkowski> {
        match self {
            Context::Coordinates(m) => Some(m),
            Context::Symmetry(_) => None,
            Context::Forms(c) => Some(c.mink()),
        }
    }

    fn scalar(&self, c: Scalar) -> Element {
        match self {
            Context::Coordinates(m) => Element::scalar(m.presentation(), c),
            Context::Symmetry(p) => Element::scalar(p.presentation(), c),
            Context::Forms(cal) => Element::scalar(cal.mink().presentation(), c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Caret => write!(f, "^"),
            Tok::Slash => write!(f, "/"),
            Tok::Comma => write!(f, ","),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBracket => write!(f, "["),
            Tok::RBracket => write!(f, "]"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b',' => Tok::Comma,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError {
                        position: start,
                        message: "number too large".to_string(),
                    })?;
                toks.push((start, Tok::Num(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return err(i, format!("unexpected character '{}'", other as char));
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'c> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: Context<'c>,
}

impl<'c> Parser<'c> {
    fn run(ctx: Context<'c>, text: &str) -> Result<FormValue, ParseError> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return err(0, "empty expression");
        }
        let mut p = Parser { toks, pos: 0, end: text.len(), ctx };
        let v = p.expr()?;
        if let Some((at, tok)) = p.peek() {
            return err(at, format!("unexpected trailing '{tok}'"));
        }
        Ok(v)
    }

    fn peek(&self) -> Option<(usize, &Tok)> {
        self.toks.get(self.pos).map(|(at, t)| (*at, t))
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if let Some((_, t)) = self.peek() {
            if t == want {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn expect(&mut self, want: Tok) -> Result<usize, ParseError> {
        match self.peek() {
            Some((at, t)) if *t == want => {
                self.pos += 1;
                Ok(at)
            }
            Some((at, t)) => err(at, format!("expected '{want}', found '{t}'")),
            None => err(self.end, format!("expected '{want}', found end of input")),
        }
    }

    fn nat(&mut self) -> Result<(usize, u64), ParseError> {
        match self.peek() {
            Some((at, Tok::Num(n))) => {
                let n = *n;
                self.pos += 1;
                Ok((at, n))
            }
            Some((at, t)) => err(at, format!("expected a number, found '{t}'")),
            None => err(self.end, "expected a number, found end of input"),
        }
    }

    fn index(&mut self, n: usize) -> Result<usize, ParseError> {
        let (at, k) = self.nat()?;
        if (k as usize) >= n {
            return err(at, format!("index {k} out of range for dimension {n}"));
        }
        Ok(k as usize)
    }

    fn expr(&mut self) -> Result<FormValue, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = neg(acc);
        }
        loop {
            if self.eat(&Tok::Plus) {
                let at = self.here();
                let rhs = self.term()?;
                acc = self.combine(acc, rhs, false, at)?;
            } else if self.eat(&Tok::Minus) {
                let at = self.here();
                let rhs = self.term()?;
                acc = self.combine(acc, rhs, true, at)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FormValue, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let at = self.here();
            let rhs = self.factor()?;
            acc = self.mul(acc, rhs, at)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FormValue, ParseError> {
        let at = self.here();
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let (_, k) = self.nat()?;
        match base {
            FormValue::Zero(e) => {
                let mut acc = self.ctx.scalar(Scalar::one());
                for _ in 0..k {
                    acc = &acc * &e;
                }
                Ok(FormValue::Zero(acc))
            }
            FormValue::One(f) => {
                if k == 1 {
                    Ok(FormValue::One(f))
                } else {
                    err(at, "the exponent of a one-form must be 1")
                }
            }
        }
    }

    fn atom(&mut self) -> Result<FormValue, ParseError> {
        let (at, tok) = match self.peek() {
            Some((at, t)) => (at, t.clone()),
            None => return err(self.end, "expected an expression, found end of input"),
        };
        match tok {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Num(p) => {
                self.bump();
                let p = to_i64(p, at)?;
                if self.eat(&Tok::Slash) {
                    let (qat, q) = self.nat()?;
                    if q == 0 {
                        return err(qat, "zero denominator");
                    }
                    let q = to_i64(q, qat)?;
                    Ok(FormValue::Zero(self.ctx.scalar(Scalar::from_ratio(p, q))))
                } else {
                    Ok(FormValue::Zero(self.ctx.scalar(Scalar::from_integer(p))))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                self.named_atom(at, &name)
            }
            other => err(at, format!("expected an expression, found '{other}'")),
        }
    }

    fn named_atom(&mut self, at: usize, name: &str) -> Result<FormValue, ParseError> {
        match name {
            "i" => return Ok(FormValue::Zero(self.ctx.scalar(Scalar::i()))),
            "k" => {
                // `k^e` is the e-th power of the inverse deformation
                // parameter; bare `k` means `k^1`.
                let mut exp: i64 = 1;
                if self.eat(&Tok::Caret) {
                    let negative = self.eat(&Tok::Minus);
                    let (eat, e) = self.nat()?;
                    let e = to_i64(e, eat)?;
                    exp = if negative { -e } else { e };
                }
                return Ok(FormValue::Zero(self.ctx.scalar(Scalar::lambda_pow(-exp))));
            }
            "phi" => {
                if let Some(m) = self.ctx.mink() {
                    return Ok(FormValue::Zero(m.phi()));
                }
                return err(at, "unknown symbol 'phi' in the symmetry algebra");
            }
            "tau" => {
                if let Context::Forms(c) = self.ctx {
                    return Ok(FormValue::One(c.one_form(FormSymbol::Trace)));
                }
                return err(at, "the form symbol 'tau' needs the form context");
            }
            "a" | "L" => {
                let p = match self.ctx {
                    Context::Symmetry(p) => p,
                    _ => {
                        return err(
                            at,
                            format!("the symbol '{name}' needs the symmetry algebra"),
                        )
                    }
                };
                let n = p.dim();
                self.expect(Tok::LBracket)?;
                let mu = self.index(n)?;
                let e = if name == "a" {
                    p.a(mu)
                } else {
                    self.expect(Tok::Comma)?;
                    let nu = self.index(n)?;
                    p.lam(mu, nu)
                };
                self.expect(Tok::RBracket)?;
                return Ok(FormValue::Zero(e));
            }
            _ => {}
        }
        if let Some(rest) = name.strip_prefix('x') {
            if let Ok(mu) = rest.parse::<usize>() {
                if let Some(m) = self.ctx.mink() {
                    if mu >= m.dim() {
                        return err(
                            at,
                            format!("index {mu} out of range for dimension {}", m.dim()),
                        );
                    }
                    return Ok(FormValue::Zero(m.x(mu)));
                }
                return err(at, format!("the symbol '{name}' needs the coordinate algebra"));
            }
        }
        if let Some(rest) = name.strip_prefix('t') {
            if let Ok(mu) = rest.parse::<usize>() {
                if let Context::Forms(c) = self.ctx {
                    if mu >= c.dim() {
                        return err(
                            at,
                            format!("index {mu} out of range for dimension {}", c.dim()),
                        );
                    }
                    return Ok(FormValue::One(c.one_form(FormSymbol::Coord(mu))));
                }
                return err(at, format!("the form symbol '{name}' needs the form context"));
            }
        }
        err(at, format!("unknown symbol '{name}'"))
    }

    fn combine(
        &self,
        a: FormValue,
        b: FormValue,
        subtract: bool,
        at: usize,
    ) -> Result<FormValue, ParseError> {
        let b = if subtract { neg(b) } else { b };
        match (a, b) {
            (FormValue::Zero(x), FormValue::Zero(y)) => Ok(FormValue::Zero(&x + &y)),
            (FormValue::One(f), FormValue::One(g)) => Ok(FormValue::One(f.add(&g))),
            _ => err(at, "cannot add a one-form to an algebra element"),
        }
    }

    fn mul(
        &self,
        a: FormValue,
        b: FormValue,
        at: usize,
    ) -> Result<FormValue, ParseError> {
        match (a, b) {
            (FormValue::Zero(x), FormValue::Zero(y)) => Ok(FormValue::Zero(&x * &y)),
            (FormValue::Zero(x), FormValue::One(f)) => Ok(FormValue::One(f.left_mul(&x))),
            (FormValue::One(f), FormValue::Zero(y)) => {
                let c = match self.ctx {
                    Context::Forms(c) => c,
                    _ => unreachable!("forms only arise in the form context"),
                };
                Ok(FormValue::One(c.right_mul(&f, &y)))
            }
            (FormValue::One(_), FormValue::One(_)) => err(
                at,
                "cannot multiply two one-forms in an expression; use the wedge command",
            ),
        }
    }
}

fn neg(v: FormValue) -> FormValue {
    match v {
        FormValue::Zero(e) => FormValue::Zero(-&e),
        FormValue::One(f) => FormValue::One(f.scale(&-&Scalar::one())),
    }
}

fn to_i64(n: u64, at: usize) -> Result<i64, ParseError> {
    i64::try_from(n).map_err(|_| ParseError {
        position: at,
        message: "number too large".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::Metric;

    fn mink(n: usize) -> Minkowski {
        Minkowski::new(Metric::mostly_minus(n)).expect("valid metric")
    }

    fn calc(n: usize) -> Calculus {
        Calculus::new(Metric::mostly_minus(n)).expect("valid metric")
    }

    #[test]
    fn parses_coordinate_words_and_normalizes() {
        let m = mink(2);
        let e = parse_coordinate_expression(&m, "x1*x0").expect("parses");
        assert_eq!(e, &m.x(1) * &m.x(0));
        assert_eq!(e.to_string(), "x0*x1 - i*k^-1*x1");
    }

    #[test]
    fn parses_the_quadratic_invariant_by_name() {
        let m = mink(2);
        let e = parse_coordinate_expression(&m, "phi").expect("parses");
        assert_eq!(e, m.phi());
        assert_eq!(e.to_string(), "x0^2 - x1^2 + i*k^-1*x0");
    }

    #[test]
    fn parses_symmetry_products() {
        let p = Poincare::new(Metric::mostly_minus(2)).expect("valid metric");
        let e = parse_symmetry_expression(&p, "L[0,1]*a[0]").expect("parses");
        assert_eq!(e, &p.lam(0, 1) * &p.a(0));
    }

    #[test]
    fn parses_scalars_powers_and_signs() {
        let m = mink(2);
        let parse = |s: &str| parse_coordinate_expression(&m, s).expect("parses");
        assert_eq!(
            parse("3/2*i*k^-2*x0^3"),
            (&(&m.x(0) * &m.x(0)) * &m.x(0))
                .scale(&(&(&Scalar::from_ratio(3, 2) * &Scalar::i()) * &Scalar::lambda_pow(2))),
        );
        assert_eq!(parse("k^1"), Element::scalar(m.presentation(), Scalar::lambda_pow(-1)));
        assert_eq!(parse("k"), Element::scalar(m.presentation(), Scalar::lambda_pow(-1)));
        assert_eq!(parse("x0^0"), m.unit());
        assert_eq!(parse("-x0 + 2"), &m.unit().scale(&Scalar::from_integer(2)) - &m.x(0));
        assert_eq!(
            parse("(1 - i)*x1"),
            m.x(1).scale(&(&Scalar::one() - &Scalar::i())),
        );
    }

    #[test]
    fn parses_forms_with_both_sided_coefficients() {
        let c = calc(2);
        let left = parse_form_expression(&c, "x0*t1 + tau").expect("parses");
        let FormValue::One(f) = left else { panic!("expected a one-form") };
        assert_eq!(f.coefficient(FormSymbol::Coord(1)), Some(&c.mink().x(0)));
        assert_eq!(f.coefficient(FormSymbol::Trace), Some(&c.mink().unit()));

        let right = parse_form_expression(&c, "t1*x1").expect("parses");
        let FormValue::One(g) = right else { panic!("expected a one-form") };
        assert_eq!(g, c.right_mul(&c.one_form(FormSymbol::Coord(1)), &c.mink().x(1)));
        // Moving the coefficient across the basis form picks up the
        // commutation correction, so the two orders differ.
        let left = parse_form_expression(&c, "x1*t1").expect("parses");
        let FormValue::One(h) = left else { panic!("expected a one-form") };
        assert_ne!(g, h);
        assert_eq!(g.coefficient(FormSymbol::Coord(1)), h.coefficient(FormSymbol::Coord(1)));
        assert!(g.coefficient(FormSymbol::Trace).is_some(), "correction shows up in tau");
    }

    #[test]
    fn printed_elements_parse_back_to_equal_values() {
        let m = mink(3);
        let samples = vec![
            m.phi(),
            &(&m.x(2) * &m.x(0)) * &m.x(1),
            m.x(0).scale(&(&Scalar::one() + &(&Scalar::from_integer(2) * &Scalar::i()))),
            &m.unit() - &m.x(1).scale(&Scalar::from_ratio(7, 3)),
            m.zero(),
        ];
        for e in samples {
            let back = parse_coordinate_expression(&m, &e.to_string()).expect("round trip");
            assert_eq!(back, e, "failed on {e}");
        }
        let p = Poincare::new(Metric::mostly_minus(2)).expect("valid metric");
        let q = &(&p.lam(0, 1) * &p.a(0)) - &p.a(1).scale(&Scalar::i_lambda());
        assert_eq!(parse_symmetry_expression(&p, &q.to_string()).expect("round trip"), q);
    }

    #[test]
    fn printed_forms_parse_back_to_equal_values() {
        let c = calc(2);
        let m = c.mink();
        let samples = vec![
            c.d0(&(&m.x(0) * &m.x(1))),
            c.d0(&m.phi()),
            c.right_mul(&c.one_form(FormSymbol::Trace), &m.x(1)).scale(&Scalar::i_lambda()),
        ];
        for f in samples {
            let back = parse_form_expression(&c, &f.to_string()).expect("round trip");
            let FormValue::One(g) = back else { panic!("expected a one-form") };
            assert_eq!(g, f, "failed on {f}");
        }
    }

    #[test]
    fn reports_positions_and_context_errors() {
        let m = mink(2);
        let c = calc(2);
        let p = Poincare::new(Metric::mostly_minus(2)).expect("valid metric");

        let e = parse_coordinate_expression(&m, "x0 + + x1").unwrap_err();
        assert_eq!(e.position, 5);

        let e = parse_coordinate_expression(&m, "x5").unwrap_err();
        assert!(e.message.contains("out of range"));

        let e = parse_coordinate_expression(&m, "tau").unwrap_err();
        assert!(e.message.contains("form context"));

        let e = parse_coordinate_expression(&m, "a[0]").unwrap_err();
        assert!(e.message.contains("symmetry algebra"));

        let e = parse_symmetry_expression(&p, "x0").unwrap_err();
        assert!(e.message.contains("coordinate algebra"));

        let e = parse_form_expression(&c, "t0*t1").unwrap_err();
        assert!(e.message.contains("wedge"));

        let e = parse_form_expression(&c, "t0 + x0").unwrap_err();
        assert!(e.message.contains("cannot add"));

        let e = parse_coordinate_expression(&m, "3/0").unwrap_err();
        assert!(e.message.contains("zero denominator"));

        let e = parse_coordinate_expression(&m, "x0 @").unwrap_err();
        assert_eq!(e.position, 3);

        let e = parse_coordinate_expression(&m, "(x0").unwrap_err();
        assert_eq!(e.position, 3);

        let e = parse_coordinate_expression(&m, "").unwrap_err();
        assert!(e.message.contains("empty"));

        let e = parse_coordinate_expression(&m, "y0").unwrap_err();
        assert!(e.message.contains("unknown symbol"));

        let e = parse_form_expression(&c, "t0^2").unwrap_err();
        assert!(e.message.contains("must be 1"));
    }
}

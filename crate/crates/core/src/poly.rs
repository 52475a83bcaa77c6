//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Storage is order-independent (a canonical map keyed on interned
//! variables), so one polynomial value can be reused under any term order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::order::TermOrder;
use crate::vars::Variable;

/// Exact coefficient type used everywhere outside the QUBO/eigen float
/// boundary.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("assignment does not cover variable {0}")]
    MissingVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A power product of variables. No zero exponents are stored; the empty
/// product is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    // Sorted by interned variable id.
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_powers(powers: &[(Variable, u32)]) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for &(v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Variable, u32> = self.exps.iter().copied().collect();
        for &(v, e) in &other.exps {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    /// `self / other` when the division is exact.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut map: BTreeMap<Variable, u32> = self.exps.iter().copied().collect();
        for &(v, e) in &other.exps {
            let cur = map.get_mut(&v)?;
            if *cur < e {
                return None;
            }
            *cur -= e;
        }
        Some(Monomial {
            exps: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Variable, u32> = self.exps.iter().copied().collect();
        for &(v, e) in &other.exps {
            let cur = map.entry(v).or_insert(0);
            *cur = (*cur).max(e);
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, _)| other.exponent(v) == 0)
    }
}

/// A sparse polynomial: monomial -> nonzero exact rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(rat(1), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(&m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut set = BTreeSet::new();
        for m in self.terms.keys() {
            set.extend(m.variables());
        }
        set
    }

    pub fn add_term(&mut self, m: &Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn square(&self) -> Polynomial {
        self * self
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The maximal term of a nonzero polynomial under `ord`.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(Rational, Monomial), PolyError> {
        let mut best: Option<(&Monomial, &Rational)> = None;
        for (m, c) in &self.terms {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if ord.compare(m, bm) == std::cmp::Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best.map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Scales so the leading coefficient under `ord` is 1.
    pub fn monic(&self, ord: &TermOrder) -> Result<Polynomial, PolyError> {
        let (lc, _) = self.leading_term(ord)?;
        Ok(self.scale(&(Rational::one() / lc)))
    }

    /// Exact evaluation at a 0/1 point covering all variables of `self`.
    pub fn eval_binary(&self, assignment: &HashMap<Variable, u8>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        'terms: for (m, c) in &self.terms {
            for &(v, _) in m.powers() {
                match assignment.get(&v) {
                    Some(0) => continue 'terms,
                    Some(_) => {}
                    None => return Err(PolyError::MissingVariable(v.name())),
                }
            }
            total += c;
        }
        Ok(total)
    }

    /// Exact evaluation at an arbitrary rational point.
    pub fn eval(&self, assignment: &HashMap<Variable, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &(v, e) in m.powers() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingVariable(v.name()))?;
                for _ in 0..e {
                    prod *= x;
                }
            }
            total += prod;
        }
        Ok(total)
    }

    /// Replaces every occurrence of `v` by the polynomial `value`.
    pub fn substitute(&self, v: Variable, value: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                out.add_term(m, c);
            } else {
                let rest = m
                    .try_div(&Monomial::from_powers(&[(v, e)]))
                    .expect("exponent bookkeeping");
                let piece = value.pow(e).mul_monomial(&rest).scale(c);
                out = &out + &piece;
            }
        }
        out
    }

    pub fn derivative(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let lowered = if e == 1 {
                m.try_div(&Monomial::var(v)).unwrap()
            } else {
                let mut pows: Vec<(Variable, u32)> =
                    m.powers().iter().copied().filter(|&(w, _)| w != v).collect();
                pows.push((v, e - 1));
                Monomial::from_powers(&pows)
            };
            out.add_term(&lowered, &(c * rat(e as i64)));
        }
        out
    }

    /// Terms in a fixed display order: total degree descending, then by the
    /// name sequence of the monomial. Stable across runs.
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut items: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        items.sort_by_cached_key(|(m, _)| {
            let names: Vec<(String, u32)> = m.powers().iter().map(|&(v, e)| (v.name(), e)).collect();
            (std::cmp::Reverse(m.degree()), names)
        });
        items
    }

    /// Renders in the conventional infix syntax, e.g.
    /// `3*P_1*Q_2 - 2*Z_1_2 + 1`.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }

    /// Parses the infix syntax produced by [`Polynomial::to_text`].
    pub fn parse(input: &str) -> Result<Polynomial, PolyError> {
        parse_polynomial(input)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            if m.is_one() {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                let mut first = true;
                for &(v, e) in m.powers() {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{}", v.name())?;
                    } else {
                        write!(f, "{}^{}", v.name(), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m, &-c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(&ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&rat(-1))
    }
}

// ----------------------------------------------------------------------
// Text parsing
// ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Number(BigRational),
    Ident(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>, PolyError> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = input[start..i].parse().unwrap();
                // "a/b" immediately after an integer is a rational coefficient
                let mut value = BigRational::from_integer(numer);
                if i < bytes.len() && bytes[i] as char == '/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        j += 1;
                    }
                    if dstart == j {
                        return Err(PolyError::Parse("dangling '/' in coefficient".into()));
                    }
                    let denom: BigInt = input[dstart..j].parse().unwrap();
                    if denom.is_zero() {
                        return Err(PolyError::Parse("zero denominator".into()));
                    }
                    value /= BigRational::from_integer(denom);
                    i = j;
                }
                tokens.push(Token::Number(value));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(input[start..i].to_string()));
            }
            other => {
                return Err(PolyError::Parse(format!(
                    "unexpected character '{other}' at byte {i}"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        let mut sign = rat(1);
        // leading sign
        match self.peek() {
            Some(Token::Minus) => {
                sign = rat(-1);
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            out = &out + &term.scale(&sign);
            match self.next() {
                None => break,
                Some(Token::Plus) => sign = rat(1),
                Some(Token::Minus) => sign = rat(-1),
                Some(t) => {
                    return Err(PolyError::Parse(format!(
                        "expected '+' or '-' between terms, got {t:?}"
                    )))
                }
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.parse_factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial, PolyError> {
        match self.next() {
            Some(Token::Number(value)) => Ok(Polynomial::constant(value)),
            Some(Token::Ident(name)) => {
                let v = Variable::named(&name);
                let mut exp = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Number(n)) if n.is_integer() => {
                            exp = n.numer().to_string().parse().map_err(|_| {
                                PolyError::Parse("exponent out of range".into())
                            })?;
                        }
                        _ => return Err(PolyError::Parse("expected exponent after '^'".into())),
                    }
                }
                Ok(Polynomial::term(
                    rat(1),
                    Monomial::from_powers(&[(v, exp)]),
                ))
            }
            Some(Token::LParen) => {
                let inner = self.parse_poly_until_rparen()?;
                Ok(inner)
            }
            other => Err(PolyError::Parse(format!(
                "expected a factor, got {other:?}"
            ))),
        }
    }

    fn parse_poly_until_rparen(&mut self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        let mut sign = rat(1);
        match self.peek() {
            Some(Token::Minus) => {
                sign = rat(-1);
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.parse_term()?;
            out = &out + &term.scale(&sign);
            match self.next() {
                Some(Token::RParen) => break,
                Some(Token::Plus) => sign = rat(1),
                Some(Token::Minus) => sign = rat(-1),
                other => {
                    return Err(PolyError::Parse(format!(
                        "expected '+', '-' or ')' inside parentheses, got {other:?}"
                    )))
                }
            }
        }
        Ok(out)
    }
}

fn parse_polynomial(input: &str) -> Result<Polynomial, PolyError> {
    if input.trim().is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.parse_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::TermOrder;

    fn v(name: &str) -> Variable {
        Variable::named(name)
    }

    fn p(text: &str) -> Polynomial {
        Polynomial::parse(text).unwrap()
    }

    #[test]
    fn mul_identity() {
        let x = p("x + 1");
        assert_eq!(&x * &Polynomial::one(), x);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn self_cancellation() {
        let h = p("P_1 + Q_1 - 1 - 2*Z_1_2");
        assert!((&h - &h).is_zero());
    }

    #[test]
    fn eval_binary_cell_points() {
        // H_ij = Q*P + S + Z - Sp - 2*Zp
        let h = p("Q_1*P_1 + S_1_1 + Z_1_1 - S_2_0 - 2*Z_1_2");
        let names = ["Q_1", "P_1", "S_1_1", "Z_1_1", "S_2_0", "Z_1_2"];
        let at = |bits: [u8; 6]| {
            let mut a = HashMap::new();
            for (n, b) in names.iter().zip(bits) {
                a.insert(v(n), b);
            }
            h.eval_binary(&a).unwrap()
        };
        assert_eq!(at([1, 1, 0, 0, 1, 0]), rat(0));
        assert_eq!(at([0, 0, 0, 0, 0, 0]), rat(0));
        assert_eq!(at([1, 1, 1, 1, 0, 0]), rat(3));
    }

    #[test]
    fn eval_binary_missing_variable() {
        let h = p("x*y");
        let mut a = HashMap::new();
        a.insert(v("x"), 1);
        assert_eq!(h.eval_binary(&a), Err(PolyError::MissingVariable("y".into())));
    }

    #[test]
    fn leading_term_examples() {
        let plex = TermOrder::plex(vec![v("x"), v("y")]);
        let grevlex = TermOrder::grevlex(vec![v("x"), v("y")]);
        let f = p("x*y + y^2");
        let (c, m) = f.leading_term(&plex).unwrap();
        assert_eq!(c, rat(1));
        assert_eq!(m, Monomial::from_powers(&[(v("x"), 1), (v("y"), 1)]));
        let g = p("x + y^3");
        assert_eq!(g.leading_term(&plex).unwrap().1, Monomial::var(v("x")));
        assert_eq!(
            g.leading_term(&grevlex).unwrap().1,
            Monomial::from_powers(&[(v("y"), 3)])
        );
        assert_eq!(
            Polynomial::zero().leading_term(&plex),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn derivative_basic() {
        let f = p("x^2*y + 3*x - 7");
        assert_eq!(f.derivative(v("x")), p("2*x*y + 3"));
        assert_eq!(f.derivative(v("y")), p("x^2"));
    }

    #[test]
    fn substitute_basic() {
        let f = p("x^2 + x*y");
        let got = f.substitute(v("x"), &p("1 - y"));
        assert_eq!(got, p("1 - y"));
    }

    #[test]
    fn text_round_trip() {
        let f = p("3*P_1*Q_2 - 2*Z_1_2 + 1");
        assert_eq!(Polynomial::parse(&f.to_text()).unwrap(), f);
        assert_eq!(f.to_text(), "3*P_1*Q_2 - 2*Z_1_2 + 1");
        let g = p("1/2*x^2 - 5/3");
        assert_eq!(Polynomial::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_parentheses() {
        assert_eq!(p("(x + 1)*(x - 1)"), p("x^2 - 1"));
        assert_eq!(p("-(x - y)"), p("y - x"));
    }
}

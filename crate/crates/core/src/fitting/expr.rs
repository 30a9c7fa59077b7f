use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::primes::{is_prime, PrimeSet};

/// A Fitting class built from named atoms, class products, intersections
/// and invariable Hartley classes.
///
/// Textual form (whitespace-insensitive):
///
/// ```text
/// atom := triv | all | sol | nil | Epi(P) | Np(p) | NilPi(P) | PiNil(P) | PiSol(P)
/// P    := {p1,p2,...} | ~{p1,...}
/// expr := atom | prod(expr,expr) | meet(expr,...) | hartley(expr;P)
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassExpr {
    /// Groups of order 1.
    Trivial,
    All,
    Soluble,
    Nilpotent,
    /// Groups whose order has only prime divisors in the set.
    PiGroups(PrimeSet),
    PiSoluble(PrimeSet),
    PiNilpotent(PrimeSet),
    /// Groups of prime-power order for the given prime.
    PGroups(u64),
    /// Nilpotent groups whose order has only prime divisors in the set.
    NilpotentPi(PrimeSet),
    /// Groups `G` with `G / G_F` in the second class.
    Product(Box<ClassExpr>, Box<ClassExpr>),
    Meet(Vec<ClassExpr>),
    /// Intersection over `p` in the set of `X E_p' N_p`.
    Hartley(Box<ClassExpr>, PrimeSet),
}

impl ClassExpr {
    pub fn product(f: ClassExpr, h: ClassExpr) -> Self {
        ClassExpr::Product(Box::new(f), Box::new(h))
    }

    pub fn hartley(x: ClassExpr, pi: PrimeSet) -> Self {
        ClassExpr::Hartley(Box::new(x), pi)
    }

    pub fn meet(parts: Vec<ClassExpr>) -> Self {
        ClassExpr::Meet(parts)
    }

    /// `F^k` as a left-nested product; `F^0` is the trivial class.
    pub fn power(f: &ClassExpr, k: usize) -> Self {
        match k {
            0 => ClassExpr::Trivial,
            _ => (1..k).fold(f.clone(), |acc, _| ClassExpr::product(acc, f.clone())),
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::Trivial => f.write_str("triv"),
            ClassExpr::All => f.write_str("all"),
            ClassExpr::Soluble => f.write_str("sol"),
            ClassExpr::Nilpotent => f.write_str("nil"),
            ClassExpr::PiGroups(p) => write!(f, "Epi({p})"),
            ClassExpr::PiSoluble(p) => write!(f, "PiSol({p})"),
            ClassExpr::PiNilpotent(p) => write!(f, "PiNil({p})"),
            ClassExpr::PGroups(p) => write!(f, "Np({p})"),
            ClassExpr::NilpotentPi(p) => write!(f, "NilPi({p})"),
            ClassExpr::Product(a, b) => write!(f, "prod({a},{b})"),
            ClassExpr::Meet(parts) => {
                f.write_str("meet(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            ClassExpr::Hartley(x, p) => write!(f, "hartley({x};{p})"),
        }
    }
}

impl FromStr for ClassExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        let e = parser.expr()?;
        parser.finish()?;
        Ok(e)
    }
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a class name"));
        }
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn prime(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a prime"));
        }
        let n: u64 = rest[..len]
            .parse()
            .map_err(|_| ParseError::new(start, "number out of range"))?;
        if !is_prime(n) {
            return Err(ParseError::new(start, format!("{n} is not prime")));
        }
        self.pos += len;
        Ok(n)
    }

    pub(crate) fn prime_set(&mut self) -> Result<PrimeSet, ParseError> {
        let cofinite = self.eat('~');
        self.expect('{')?;
        let mut primes = Vec::new();
        if !self.eat('}') {
            loop {
                primes.push(self.prime()?);
                if self.eat('}') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let set = if cofinite {
            PrimeSet::try_cofinite(primes)
        } else {
            PrimeSet::try_finite(primes)
        };
        Ok(set.expect("entries checked above"))
    }

    pub(crate) fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let (start, name) = self.ident()?;
        let expr = match name {
            "triv" => ClassExpr::Trivial,
            "all" => ClassExpr::All,
            "sol" => ClassExpr::Soluble,
            "nil" => ClassExpr::Nilpotent,
            "Epi" | "NilPi" | "PiNil" | "PiSol" => {
                self.expect('(')?;
                let set = self.prime_set()?;
                self.expect(')')?;
                match name {
                    "Epi" => ClassExpr::PiGroups(set),
                    "NilPi" => ClassExpr::NilpotentPi(set),
                    "PiNil" => ClassExpr::PiNilpotent(set),
                    _ => ClassExpr::PiSoluble(set),
                }
            }
            "Np" => {
                self.expect('(')?;
                let p = self.prime()?;
                self.expect(')')?;
                ClassExpr::PGroups(p)
            }
            "prod" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                ClassExpr::product(a, b)
            }
            "meet" => {
                self.expect('(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(',') {
                    parts.push(self.expr()?);
                }
                self.expect(')')?;
                ClassExpr::Meet(parts)
            }
            "hartley" => {
                self.expect('(')?;
                let x = self.expr()?;
                self.expect(';')?;
                let set = self.prime_set()?;
                self.expect(')')?;
                ClassExpr::hartley(x, set)
            }
            other => return Err(ParseError::new(start, format!("unknown class `{other}`"))),
        };
        Ok(expr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_every_form() {
        let e: ClassExpr = " prod( nil , hartley(Epi({2,3,5}); ~{2}) ) ".parse().unwrap();
        assert_eq!(
            e,
            ClassExpr::product(
                ClassExpr::Nilpotent,
                ClassExpr::hartley(ClassExpr::PiGroups(PrimeSet::of(&[2, 3, 5])), PrimeSet::all_but(2))
            )
        );
        assert_eq!(e.to_string(), "prod(nil,hartley(Epi({2,3,5});~{2}))");
        let m: ClassExpr = "meet(Np(3),PiSol({2}),NilPi({3}),PiNil({}),sol,triv,all)"
            .parse()
            .unwrap();
        assert!(matches!(m, ClassExpr::Meet(ref v) if v.len() == 7));
    }

    #[test]
    fn errors_cite_offsets() {
        let cases = [
            ("nul", 0, "unknown"),
            ("prod(nil nil)", 9, "`,`"),
            ("Np(4)", 3, "not prime"),
            ("Epi({2,3)", 8, "`,`"),
            ("nil x", 4, "unexpected"),
            ("hartley(nil,{2})", 11, "`;`"),
            ("", 0, "class name"),
            ("meet()", 5, "class name"),
        ];
        for (src, offset, fragment) in cases {
            let err = src.parse::<ClassExpr>().unwrap_err();
            assert_eq!(err.offset, offset, "{src}: {err}");
            assert!(err.message.contains(fragment), "{src}: {err}");
        }
    }

    #[test]
    fn powers() {
        let n = ClassExpr::PiNilpotent(PrimeSet::of(&[2]));
        assert_eq!(ClassExpr::power(&n, 0), ClassExpr::Trivial);
        assert_eq!(ClassExpr::power(&n, 1), n);
        assert_eq!(
            ClassExpr::power(&n, 3).to_string(),
            "prod(prod(PiNil({2}),PiNil({2})),PiNil({2}))"
        );
    }

    fn prime_set() -> impl Strategy<Value = PrimeSet> {
        (
            prop::collection::btree_set(prop::sample::select(vec![2u64, 3, 5, 7]), 0..3),
            any::<bool>(),
        )
            .prop_map(|(s, cof)| {
                if cof {
                    PrimeSet::Cofinite(s)
                } else {
                    PrimeSet::Finite(s)
                }
            })
    }

    pub(crate) fn class_expr() -> impl Strategy<Value = ClassExpr> {
        let leaf = prop_oneof![
            Just(ClassExpr::Trivial),
            Just(ClassExpr::All),
            Just(ClassExpr::Soluble),
            Just(ClassExpr::Nilpotent),
            prime_set().prop_map(ClassExpr::PiGroups),
            prime_set().prop_map(ClassExpr::PiSoluble),
            prime_set().prop_map(ClassExpr::PiNilpotent),
            prime_set().prop_map(ClassExpr::NilpotentPi),
            prop::sample::select(vec![2u64, 3, 5]).prop_map(ClassExpr::PGroups),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ClassExpr::product(a, b)),
                prop::collection::vec(inner.clone(), 1..3).prop_map(ClassExpr::Meet),
                (inner, prime_set()).prop_map(|(x, p)| ClassExpr::hartley(x, p)),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(e in class_expr()) {
            let text = e.to_string();
            prop_assert_eq!(text.parse::<ClassExpr>().unwrap(), e);
        }
    }
}

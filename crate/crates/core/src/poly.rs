//! Exact multivariate polynomials over the rationals.
//!
//! A polynomial stores its terms with strictly decreasing monomials in the
//! ring's canonical (grevlex) order, no zero coefficients, and exact
//! `BigRational` coefficients. Equal polynomials therefore have identical
//! representations, and the text rendering below is bit-stable.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingSpec;

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

/// Convenience constructor for exact rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coef: Rational,
    pub mono: Monomial,
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingSpec>, value: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !value.is_zero() {
            p.terms.push(Term {
                coef: value,
                mono: Monomial::one(ring.num_vars()),
            });
        }
        p
    }

    pub fn one(ring: &Arc<RingSpec>) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<RingSpec>, idx: usize) -> Polynomial {
        assert!(idx < ring.num_vars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term {
                coef: Rational::one(),
                mono: Monomial::var(ring.num_vars(), idx),
            }],
        }
    }

    /// Build a polynomial from arbitrary (coefficient, monomial) pairs,
    /// combining equal monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<RingSpec>, terms: Vec<(Rational, Monomial)>) -> Polynomial {
        let n = ring.num_vars();
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coef, mono)| {
                assert_eq!(mono.num_vars(), n, "monomial length does not match ring");
                Term { coef, mono }
            })
            .collect();
        terms.sort_by(|a, b| Monomial::grevlex_cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coef += t.coef,
                _ => out.push(t),
            }
            if let Some(last) = out.last() {
                if last.coef.is_zero() {
                    out.pop();
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of one variable across all terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.exp(var))
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(var) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.degree();
                self.terms.iter().all(|t| t.mono.degree() == d)
            }
        }
    }

    fn check_ring(&self, other: &Polynomial, op: &str) -> Result<()> {
        if RingSpec::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{op} over distinct rings")))
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "add")?;
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "sub")?;
        Ok(self.sub_raw(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other, "mul")?;
        Ok(self.mul_raw(other))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: -t.coef.clone(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: &t.coef * c,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Merge-add assuming both operands share a ring.
    pub(crate) fn add_raw(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match Monomial::grevlex_cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coef + &b.coef;
                    if !c.is_zero() {
                        out.push(Term {
                            coef: c,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn sub_raw(&self, other: &Polynomial) -> Polynomial {
        self.add_raw(&other.neg())
    }

    pub(crate) fn mul_raw(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // accumulate the shorter operand against the longer one
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.add_raw(&large.mul_term(&t.coef, &t.mono));
        }
        acc
    }

    /// Multiply by a single term. Monomial order is multiplicative, so the
    /// term list stays sorted.
    pub(crate) fn mul_term(&self, coef: &Rational, mono: &Monomial) -> Polynomial {
        if coef.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: &t.coef * coef,
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let n = self.ring.num_vars();
        if point.len() != n {
            return Err(Error::PointLength {
                got: point.len(),
                want: n,
            });
        }
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coef.clone();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Replace one variable by a polynomial of the same ring.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Polynomial {
        let max_e = self.degree_in(var);
        if max_e == 0 {
            return self.clone();
        }
        // cache replacement powers
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Polynomial::one(&self.ring));
        for e in 1..=max_e {
            powers.push(powers[(e - 1) as usize].mul_raw(replacement));
        }
        let mut acc = Polynomial::zero(&self.ring);
        for t in &self.terms {
            let e = t.mono.exp(var);
            if e == 0 {
                acc = acc.add_raw(&Polynomial {
                    ring: self.ring.clone(),
                    terms: vec![t.clone()],
                });
            } else {
                let mut exps = t.mono.exps().to_vec();
                exps[var] = 0;
                let stripped = Monomial::new(exps);
                acc = acc.add_raw(&powers[e as usize].mul_term(&t.coef, &stripped));
            }
        }
        acc
    }

    /// Leading term in the canonical grevlex order.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Content-free form with positive leading coefficient: divide by the
    /// gcd of the numerators over the lcm of the denominators, then flip the
    /// sign if needed. Arithmetic results are never normalized implicitly;
    /// this is an explicit request.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            den_lcm = den_lcm.lcm(t.coef.denom());
        }
        let mut num_gcd = BigInt::zero();
        for t in &self.terms {
            let scaled = t.coef.numer() * (&den_lcm / t.coef.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        // den_lcm/num_gcd is positive; flip it if the leading coefficient
        // would come out negative
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.terms[0].coef.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scale so the canonical leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => self.scale(&t.coef.recip()),
        }
    }

    /// Deterministic total order on polynomials of one ring, used for
    /// canonical sorting of generator lists.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        let mut i = 0;
        loop {
            match (self.terms.get(i), other.terms.get(i)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(a), Some(b)) => {
                    match Monomial::grevlex_cmp(&a.mono, &b.mono) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                    match a.coef.cmp(&b.coef) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
            }
            i += 1;
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        RingSpec::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for t in &self.terms {
            t.coef.hash(state);
            t.mono.exps().hash(state);
        }
    }
}

fn fmt_coef_abs(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let c = c.abs();
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in decreasing grevlex order, `num/den`
    /// coefficients (denominator omitted when 1), `*` between factors and
    /// `^` for exponents, variables shown by their ring names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k == 0 {
                if t.coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if t.coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = t.coef.abs().is_one();
            if !unit || t.mono.is_one() {
                fmt_coef_abs(&t.coef, f)?;
            }
            let mut need_sep = !unit || t.mono.is_one();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if need_sep {
                    write!(f, "*")?;
                }
                need_sep = true;
                write!(f, "{}", self.ring.var_name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

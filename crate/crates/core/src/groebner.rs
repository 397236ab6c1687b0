//! Buchberger engine: multivariate division, S-polynomials, and reduced
//! Groebner bases with the Gebauer-Moeller pair criteria.
//!
//! Internally polynomials are re-sorted by the active monomial order;
//! the public surface speaks canonical `Polynomial` values.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Rational};
use crate::ring::RingSpec;

/// Resource guard for the engine. Exceeding a cap aborts the computation
/// with a diagnostic error instead of hanging.
#[derive(Debug, Clone)]
pub struct Limits {
    /// maximum number of basis elements during Buchberger
    pub max_basis: usize,
    /// maximum number of terms in any intermediate polynomial
    pub max_terms: usize,
    /// optional wall-clock deadline
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 5_000,
            max_terms: 1_000_000,
            deadline: None,
        }
    }
}

impl Limits {
    pub fn with_timeout(seconds: u64) -> Limits {
        Limits {
            deadline: Some(Instant::now() + std::time::Duration::from_secs(seconds)),
            ..Limits::default()
        }
    }

    fn check_deadline(&self, what: &str) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::ResourceLimit {
                    what: what.into(),
                    detail: "wall-clock deadline exceeded".into(),
                });
            }
        }
        Ok(())
    }

    fn check_terms(&self, len: usize, what: &str) -> Result<()> {
        if len > self.max_terms {
            return Err(Error::ResourceLimit {
                what: what.into(),
                detail: format!("polynomial grew to {len} terms (cap {})", self.max_terms),
            });
        }
        Ok(())
    }
}

/// Term list sorted strictly decreasing in the active order.
type OrdTerms = Vec<(Monomial, Rational)>;

fn to_ord(p: &Polynomial, order: &MonomialOrder) -> OrdTerms {
    let mut t: OrdTerms = p
        .terms()
        .iter()
        .map(|t| (t.mono.clone(), t.coef.clone()))
        .collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

fn from_ord(ring: &Arc<RingSpec>, terms: OrdTerms) -> Polynomial {
    Polynomial::from_terms(ring, terms.into_iter().map(|(m, c)| (c, m)).collect())
}

/// f - c * x^m * g, all sorted by `order`.
fn sub_scaled(
    f: &OrdTerms,
    c: &Rational,
    m: &Monomial,
    g: &OrdTerms,
    order: &MonomialOrder,
) -> OrdTerms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match order.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(&g[j].1 * c)));
                j += 1;
            }
            Ordering::Equal => {
                let coef = &f[i].1 - &(&g[j].1 * c);
                if !coef.is_zero() {
                    out.push((gm, coef));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push((g[j].0.mul(m), -(&g[j].1 * c)));
        j += 1;
    }
    out
}

/// Scale to integer coefficients with content 1 and positive leading
/// coefficient; keeps Buchberger's intermediate numbers small.
fn make_primitive(f: &mut OrdTerms) {
    use num_bigint::BigInt;
    use num_integer::Integer as _;
    if f.is_empty() {
        return;
    }
    let mut den_lcm = BigInt::one();
    for (_, c) in f.iter() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for (_, c) in f.iter() {
        num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
    }
    let mut factor = Rational::new(den_lcm, num_gcd);
    if f[0].1.is_negative() {
        factor = -factor;
    }
    if factor.is_one() {
        return;
    }
    for (_, c) in f.iter_mut() {
        *c *= &factor;
    }
}

/// Remainder of multivariate division of `f` by `basis`: no remainder
/// monomial is divisible by any basis leading monomial.
fn normal_form_ord(
    mut f: OrdTerms,
    basis: &[OrdTerms],
    order: &MonomialOrder,
    limits: &Limits,
    what: &str,
) -> Result<OrdTerms> {
    limits.check_deadline(what)?;
    let mut rem: OrdTerms = Vec::new();
    let mut steps = 0usize;
    while !f.is_empty() {
        steps += 1;
        if steps.is_multiple_of(256) {
            limits.check_deadline(what)?;
        }
        limits.check_terms(f.len(), what)?;
        let (lm, lc) = (&f[0].0, &f[0].1);
        let reducer = basis.iter().find(|g| !g.is_empty() && g[0].0.divides(lm));
        match reducer {
            Some(g) => {
                let c = lc / &g[0].1;
                let m = g[0].0.div_into(lm).expect("divisibility checked");
                f = sub_scaled(&f, &c, &m, g, order);
            }
            None => {
                rem.push(f.remove(0));
            }
        }
    }
    Ok(rem)
}

pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Polynomial> {
    let ring = f.ring();
    for g in basis {
        if !RingSpec::same(ring, g.ring()) {
            return Err(Error::RingMismatch(
                "normal form against a foreign basis".into(),
            ));
        }
    }
    let basis_ord: Vec<OrdTerms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_ord(g, order))
        .collect();
    let rem = normal_form_ord(to_ord(f, order), &basis_ord, order, limits, "normal_form")?;
    Ok(from_ord(ring, rem))
}

/// S-polynomial with integer cross-scaling:
/// lc(g)*(lcm/lt(f))*f - lc(f)*(lcm/lt(g))*g.
fn s_poly(f: &OrdTerms, g: &OrdTerms, order: &MonomialOrder) -> OrdTerms {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.div_into(&lcm).expect("lt divides lcm");
    let scaled_f: OrdTerms = f.iter().map(|(m, c)| (m.mul(&mf), c * &g[0].1)).collect();
    let mg = g[0].0.div_into(&lcm).expect("lt divides lcm");
    sub_scaled(&scaled_f, &f[0].1, &mg, g, order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    lcm_deg: u32,
    lcm: Vec<u32>,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lcm_deg
            .cmp(&other.lcm_deg)
            .then_with(|| self.lcm.cmp(&other.lcm))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn pair(i: usize, j: usize, basis: &[OrdTerms]) -> Pair {
    let lcm = basis[i][0].0.lcm(&basis[j][0].0);
    Pair {
        lcm_deg: lcm.degree(),
        lcm: lcm.exps().to_vec(),
        i: i.min(j),
        j: i.max(j),
    }
}

/// The reduced Groebner basis of the ideal generated by `gens` under
/// `order`: monic, auto-reduced, sorted by increasing leading monomial.
/// Deterministic: shuffling `gens` yields the same output.
pub fn reduced_groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in gens {
        if !RingSpec::same(&ring, g.ring()) {
            return Err(Error::RingMismatch("generators from distinct rings".into()));
        }
    }

    let mut basis: Vec<OrdTerms> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();

    let mut seeds: Vec<OrdTerms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut t = to_ord(g, order);
            make_primitive(&mut t);
            t
        })
        .collect();
    // deterministic start independent of generator ordering
    seeds.sort_by(|a, b| {
        order
            .cmp(&a[0].0, &b[0].0)
            .then_with(|| a.len().cmp(&b.len()))
            .then_with(|| {
                for ((ma, ca), (mb, cb)) in a.iter().zip(b.iter()) {
                    match order.cmp(ma, mb).then_with(|| ca.cmp(cb)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    });
    seeds.dedup();

    for s in seeds {
        add_element(s, &mut basis, &mut pairs, limits)?;
    }

    let mut iterations = 0usize;
    while let Some(p) = pairs.pop_first() {
        iterations += 1;
        if iterations.is_multiple_of(64) {
            limits.check_deadline("groebner_basis")?;
        }
        let s = s_poly(&basis[p.i], &basis[p.j], order);
        let mut rem = normal_form_ord(s, &basis, order, limits, "groebner_basis")?;
        if rem.is_empty() {
            continue;
        }
        make_primitive(&mut rem);
        add_element(rem, &mut basis, &mut pairs, limits)?;
        if basis.len() > limits.max_basis {
            return Err(Error::ResourceLimit {
                what: "groebner_basis".into(),
                detail: format!("basis grew past {} elements", limits.max_basis),
            });
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another retained leading monomial
    let mut keep: Vec<usize> = Vec::new();
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&basis[a][0].0, &basis[b][0].0).then(a.cmp(&b)));
    for &i in &idx {
        if !keep.iter().any(|&k| basis[k][0].0.divides(&basis[i][0].0)) {
            keep.push(i);
        }
    }
    let mut minimal: Vec<OrdTerms> = keep.into_iter().map(|i| basis[i].clone()).collect();

    // interreduce: replace each element by its normal form against the rest
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let current = std::mem::take(&mut minimal[i]);
            let others: Vec<OrdTerms> = minimal.iter().filter(|g| !g.is_empty()).cloned().collect();
            let mut red = normal_form_ord(current.clone(), &others, order, limits, "interreduce")?;
            if red != current {
                changed = true;
            }
            if !red.is_empty() {
                make_primitive(&mut red);
            }
            minimal[i] = red;
        }
        minimal.retain(|g| !g.is_empty());
        if !changed {
            break;
        }
    }

    // monic, sorted by increasing leading monomial
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let out = minimal
        .into_iter()
        .map(|mut t| {
            let lc = t[0].1.clone();
            for (_, c) in t.iter_mut() {
                *c /= &lc;
            }
            from_ord(&ring, t)
        })
        .collect();
    Ok(out)
}

/// Gebauer-Moeller update: install a new basis element, pruning the pair
/// queue with the coprimality and chain criteria.
fn add_element(
    g: OrdTerms,
    basis: &mut Vec<OrdTerms>,
    pairs: &mut BTreeSet<Pair>,
    limits: &Limits,
) -> Result<()> {
    limits.check_terms(g.len(), "groebner_basis")?;
    let t = basis.len();
    let lt_t = g[0].0.clone();
    basis.push(g);

    // candidate pairs (i, t)
    let cand: Vec<Pair> = (0..t).map(|i| pair(i, t, basis)).collect();

    // criterion M: drop (i,t) when another candidate's lcm strictly divides
    let mut drop = vec![false; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a == b || drop[a] || drop[b] {
                continue;
            }
            let la = Monomial::new(cand[a].lcm.clone());
            let lb = Monomial::new(cand[b].lcm.clone());
            if lb.divides(&la) && lb != la {
                drop[a] = true;
            }
        }
    }
    // criterion F: among equal lcms keep the smallest-index pair;
    // criterion B: drop that representative when its leading terms are
    // coprime
    let mut kept: Vec<Pair> = Vec::new();
    let mut classes: std::collections::BTreeMap<Vec<u32>, Vec<usize>> = Default::default();
    for (k, c) in cand.iter().enumerate() {
        if !drop[k] {
            classes.entry(c.lcm.clone()).or_default().push(k);
        }
    }
    for (_, members) in classes {
        let rep = members[0];
        let coprime = basis[cand[rep].i][0].0.is_coprime(&basis[cand[rep].j][0].0);
        if !coprime {
            kept.push(cand[rep].clone());
        }
    }

    // prune old pairs via the chain criterion
    let old: Vec<Pair> = pairs.iter().cloned().collect();
    for p in old {
        let lcm = Monomial::new(p.lcm.clone());
        if lt_t.divides(&lcm) {
            let li = basis[p.i][0].0.lcm(&lt_t);
            let lj = basis[p.j][0].0.lcm(&lt_t);
            if li != lcm && lj != lcm {
                pairs.remove(&p);
            }
        }
    }

    pairs.extend(kept);
    Ok(())
}

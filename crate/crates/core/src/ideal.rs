//! Ideals with cached reduced Groebner bases, membership and containment
//! tests, elimination ideals, and minimal-generator degree extraction.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{normal_form, reduced_groebner_basis, Limits};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Rational};
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealRelation {
    Equal,
    /// left is contained in right
    Subset,
    /// right is contained in left
    Superset,
    Incomparable,
}

/// Degree multiset of a minimal (or, for inhomogeneous input, interreduced)
/// generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGens {
    pub degrees: Vec<u32>,
    /// false when the input was not homogeneous and the interreduced
    /// fallback was used
    pub homogeneous: bool,
}

#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    gens: Vec<Polynomial>,
    cache: Arc<RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl Ideal {
    /// Zero generators are dropped at construction.
    pub fn new(ring: &Arc<RingSpec>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if !RingSpec::same(g.ring(), ring) {
                return Err(Error::RingMismatch(
                    "ideal generator from a different ring".into(),
                ));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(RwLock::new(HashMap::new())),
        })
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under `order`, computed once per order and
    /// cached. Concurrent callers may duplicate the computation; the result
    /// is identical either way.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner_basis_with(order, &Limits::default())
    }

    pub fn groebner_basis_with(
        &self,
        order: &MonomialOrder,
        limits: &Limits,
    ) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.read().expect("gb cache poisoned").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(reduced_groebner_basis(&self.gens, order, limits)?);
        self.cache
            .write()
            .expect("gb cache poisoned")
            .insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.contains_with(f, &Limits::default())
    }

    pub fn contains_with(&self, f: &Polynomial, limits: &Limits) -> Result<bool> {
        if !RingSpec::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("membership test across rings".into()));
        }
        if f.is_zero() {
            return Ok(true);
        }
        let order = MonomialOrder::grevlex();
        let gb = self.groebner_basis_with(&order, limits)?;
        Ok(normal_form(f, &gb, &order, limits)?.is_zero())
    }

    /// Containment both ways via membership of generators against the
    /// reduced bases.
    pub fn compare(&self, other: &Ideal) -> Result<IdealRelation> {
        self.compare_with(other, &Limits::default())
    }

    pub fn compare_with(&self, other: &Ideal, limits: &Limits) -> Result<IdealRelation> {
        if !RingSpec::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal comparison across rings".into()));
        }
        let mut left_in_right = true;
        for g in &self.gens {
            if !other.contains_with(g, limits)? {
                left_in_right = false;
                break;
            }
        }
        let mut right_in_left = true;
        for g in &other.gens {
            if !self.contains_with(g, limits)? {
                right_in_left = false;
                break;
            }
        }
        Ok(match (left_in_right, right_in_left) {
            (true, true) => IdealRelation::Equal,
            (true, false) => IdealRelation::Subset,
            (false, true) => IdealRelation::Superset,
            (false, false) => IdealRelation::Incomparable,
        })
    }

    /// The elimination ideal: the intersection with the subring omitting the
    /// `kill` variables, expressed in the full ring.
    ///
    /// Generators that are linear in a killed variable with a constant
    /// coefficient are used as exact substitutions first; the remaining
    /// variables are eliminated through a block-order basis.
    pub fn eliminate(&self, kill: &BTreeSet<usize>) -> Result<Ideal> {
        self.eliminate_with(kill, &Limits::default())
    }

    pub fn eliminate_with(&self, kill: &BTreeSet<usize>, limits: &Limits) -> Result<Ideal> {
        let n = self.ring.num_vars();
        for &v in kill {
            if v >= n {
                return Err(Error::Invalid(format!(
                    "eliminate: variable {v} out of range"
                )));
            }
        }
        if kill.is_empty() {
            return Ok(self.clone());
        }
        let mut gens: Vec<Polynomial> = self.gens.clone();
        let mut remaining: BTreeSet<usize> = kill.clone();

        // substitution pass: g = c*v + rest with constant c and v-free rest
        loop {
            let mut found: Option<(usize, usize)> = None;
            'outer: for (gi, g) in gens.iter().enumerate() {
                for &v in &remaining {
                    if let Some(_c) = linear_constant_coef(g, v) {
                        found = Some((gi, v));
                        break 'outer;
                    }
                }
            }
            let Some((gi, v)) = found else { break };
            let g = gens.swap_remove(gi);
            let c = linear_constant_coef(&g, v).expect("rechecked");
            // v = -(g - c*v)/c
            let rest = g.sub_raw(&Polynomial::var(&self.ring, v).scale(&c));
            let replacement = rest.scale(&(-c.recip()));
            for h in gens.iter_mut() {
                *h = h.substitute(v, &replacement);
            }
            gens.retain(|h| !h.is_zero());
            remaining.remove(&v);
        }

        if remaining.is_empty() {
            return Ideal::new(&self.ring, gens);
        }
        let order = MonomialOrder::elimination(remaining.iter().copied(), n);
        let gb = reduced_groebner_basis(&gens, &order, limits)?;
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|p| remaining.iter().all(|&v| !p.uses_var(v)))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Degrees of a minimal homogeneous generating set, by greedy discard of
    /// generators lying in the ideal of the retained ones. Inhomogeneous
    /// input falls back to an interreduced generating set and clears the
    /// `homogeneous` flag.
    pub fn min_gens_degrees(&self) -> Result<MinGens> {
        self.min_gens_degrees_with(&Limits::default())
    }

    pub fn min_gens_degrees_with(&self, limits: &Limits) -> Result<MinGens> {
        let homogeneous = self.gens.iter().all(|g| g.is_homogeneous());
        let mut gens = self.gens.clone();
        if !homogeneous {
            gens = interreduce(&self.ring, gens, limits)?;
            let mut degrees: Vec<u32> = gens.iter().map(|g| g.total_degree()).collect();
            degrees.sort_unstable();
            return Ok(MinGens {
                degrees,
                homogeneous: false,
            });
        }
        gens.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then(a.canonical_cmp(b))
        });
        let mut retained: Vec<Polynomial> = Vec::new();
        for g in gens {
            if retained.is_empty() {
                retained.push(g);
                continue;
            }
            let sub = Ideal::new(&self.ring, retained.clone())?;
            if !sub.contains_with(&g, limits)? {
                retained.push(g);
            }
        }
        let mut degrees: Vec<u32> = retained.iter().map(|g| g.total_degree()).collect();
        degrees.sort_unstable();
        Ok(MinGens {
            degrees,
            homogeneous: true,
        })
    }
}

/// When `g` is linear in variable `v` with a constant coefficient (the only
/// term containing `v` is `c*v`), return `c`.
fn linear_constant_coef(g: &Polynomial, v: usize) -> Option<Rational> {
    let mut coef: Option<Rational> = None;
    for t in g.terms() {
        let e = t.mono.exp(v);
        if e == 0 {
            continue;
        }
        if e > 1 || t.mono.degree() != 1 || coef.is_some() {
            return None;
        }
        coef = Some(t.coef.clone());
    }
    coef.filter(|c| !c.is_zero())
}

/// Reduce each generator against the others until stable; drops zeros.
fn interreduce(
    ring: &Arc<RingSpec>,
    mut gens: Vec<Polynomial>,
    limits: &Limits,
) -> Result<Vec<Polynomial>> {
    let order = MonomialOrder::grevlex();
    loop {
        let mut changed = false;
        for i in 0..gens.len() {
            let g = std::mem::replace(&mut gens[i], Polynomial::zero(ring));
            let others: Vec<Polynomial> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
            let red = normal_form(&g, &others, &order, limits)?;
            if red != g {
                changed = true;
            }
            gens[i] = red;
        }
        gens.retain(|g| !g.is_zero());
        if !changed {
            return Ok(gens);
        }
    }
}

//! Dense-exponent monomials and the monomial orders used by the engine.

use std::cmp::Ordering;

/// A monomial as a dense exponent vector. The length always matches the
/// variable count of the ring it is used with.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    /// The monomial consisting of a single variable.
    pub fn var(num_vars: usize, idx: usize) -> Monomial {
        let mut exps = vec![0; num_vars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(a, b)| a - b)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison, with the first-listed ring
    /// variable most significant. This is the canonical order polynomials
    /// are stored in.
    pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..a.exps.len()).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                // smaller exponent on the least significant differing
                // variable wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
        for i in 0..a.exps.len() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Grevlex comparison restricted to a subset of the variables.
    fn grevlex_cmp_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        let deg = |m: &Monomial| -> u32 { vars.iter().map(|&i| m.exps[i]).sum() };
        match deg(a).cmp(&deg(b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for &i in vars.iter().rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// A total, multiplicative monomial order with 1 minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block order: the listed variables form the first block (eliminated
    /// variables), everything else the second, with grevlex inside each
    /// block. Any monomial containing a first-block variable exceeds every
    /// monomial in second-block variables only.
    Elimination {
        /// sorted variable indices of the first block
        kill: Vec<usize>,
        /// sorted variable indices of the second block
        keep: Vec<usize>,
    },
}

impl MonomialOrder {
    pub fn lex() -> MonomialOrder {
        MonomialOrder::Lex
    }

    pub fn grevlex() -> MonomialOrder {
        MonomialOrder::GrevLex
    }

    pub fn elimination(kill: impl IntoIterator<Item = usize>, num_vars: usize) -> MonomialOrder {
        let mut kill: Vec<usize> = kill.into_iter().collect();
        kill.sort_unstable();
        kill.dedup();
        assert!(
            kill.iter().all(|&i| i < num_vars),
            "kill variable out of range"
        );
        let keep: Vec<usize> = (0..num_vars).filter(|i| !kill.contains(i)).collect();
        MonomialOrder::Elimination { kill, keep }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => Monomial::lex_cmp(a, b),
            MonomialOrder::GrevLex => Monomial::grevlex_cmp(a, b),
            MonomialOrder::Elimination { kill, keep } => {
                match Monomial::grevlex_cmp_on(a, b, kill) {
                    Ordering::Equal => Monomial::grevlex_cmp_on(a, b, keep),
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        // x > y > z for ring (x, y, z)
        assert_eq!(
            Monomial::grevlex_cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])),
            Ordering::Greater
        );
        // degree dominates
        assert_eq!(
            Monomial::grevlex_cmp(&m(&[0, 2, 0]), &m(&[1, 0, 0])),
            Ordering::Greater
        );
        // y^2 > x*z in grevlex
        assert_eq!(
            Monomial::grevlex_cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
        // 1 is minimal
        assert_eq!(
            Monomial::grevlex_cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_basics() {
        let lex = MonomialOrder::lex();
        // x > y^5 in lex
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_property() {
        // kill {0}; any monomial containing x exceeds any monomial in y, z only
        let ord = MonomialOrder::elimination([0], 3);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 5])), Ordering::Less);
        // within the kept block it is grevlex
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative() {
        let orders = [
            MonomialOrder::lex(),
            MonomialOrder::grevlex(),
            MonomialOrder::elimination([1], 3),
        ];
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 3]);
        let c = m(&[2, 0, 1]);
        for ord in &orders {
            let before = ord.cmp(&a, &b);
            assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), before);
        }
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.div_into(&a).unwrap(), m(&[1, 1, 0]));
        assert!(a.div_into(&b).is_none());
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 1, 1])));
        assert!(!m(&[1, 1, 0]).is_coprime(&m(&[0, 1, 0])));
    }
}

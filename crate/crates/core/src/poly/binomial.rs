use std::cmp::Ordering;

use super::{Monomial, MonomialOrder, PolyError, VarNames};

/// `x^lead - x^trail` with unit coefficients.
///
/// Terms are kept as written; [`PureBinomial::oriented`] swaps them so that
/// `lead > trail` under a given order (a sign flip, which does not change the
/// ideal it generates). No coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureBinomial {
    lead: Monomial,
    trail: Monomial,
}

impl PureBinomial {
    pub fn new(lead: Monomial, trail: Monomial) -> Result<PureBinomial, PolyError> {
        if lead.num_vars() != trail.num_vars() {
            return Err(PolyError::LengthMismatch);
        }
        if lead == trail {
            return Err(PolyError::ZeroBinomial);
        }
        Ok(PureBinomial { lead, trail })
    }

    pub(crate) fn new_unchecked(lead: Monomial, trail: Monomial) -> PureBinomial {
        debug_assert_ne!(lead, trail);
        PureBinomial { lead, trail }
    }

    /// `none` when the two terms coincide.
    pub fn try_new(lead: Monomial, trail: Monomial) -> Option<PureBinomial> {
        (lead != trail).then_some(PureBinomial { lead, trail })
    }

    pub fn from_exponents(lead: &[u32], trail: &[u32]) -> Result<PureBinomial, PolyError> {
        PureBinomial::new(
            Monomial::from_exponents(lead.to_vec()),
            Monomial::from_exponents(trail.to_vec()),
        )
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn num_vars(&self) -> usize {
        self.lead.num_vars()
    }

    pub fn oriented(self, order: &MonomialOrder) -> PureBinomial {
        match order.cmp(&self.lead, &self.trail) {
            Ordering::Less => PureBinomial {
                lead: self.trail,
                trail: self.lead,
            },
            _ => self,
        }
    }

    pub fn is_oriented(&self, order: &MonomialOrder) -> bool {
        order.cmp(&self.lead, &self.trail) == Ordering::Greater
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    /// Multiplies both terms by `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<PureBinomial, PolyError> {
        Ok(PureBinomial {
            lead: self.lead.checked_mul(m)?,
            trail: self.trail.checked_mul(m)?,
        })
    }

    /// Largest power of `var` dividing both terms.
    pub fn common_var_power(&self, var: usize) -> u32 {
        self.lead.exponent(var).min(self.trail.exponent(var))
    }

    pub fn rename(&self, num_vars: usize, map: &[usize]) -> PureBinomial {
        PureBinomial::new_unchecked(
            self.lead.rename(num_vars, map),
            self.trail.rename(num_vars, map),
        )
    }

    /// The formal sum of signed terms, for exact cancellation checks.
    pub fn terms(&self) -> [(i64, &Monomial); 2] {
        [(1, &self.lead), (-1, &self.trail)]
    }

    pub fn render(&self, names: &VarNames) -> String {
        format!("{} - {}", self.lead.render(names), self.trail.render(names))
    }
}

/// Ideal generated by a finite list of pure binomials. An empty list is the
/// zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialIdeal {
    num_vars: usize,
    generators: Vec<PureBinomial>,
}

impl BinomialIdeal {
    pub fn new(num_vars: usize, generators: Vec<PureBinomial>) -> Result<BinomialIdeal, PolyError> {
        if generators.iter().any(|g| g.num_vars() != num_vars) {
            return Err(PolyError::LengthMismatch);
        }
        Ok(BinomialIdeal {
            num_vars,
            generators,
        })
    }

    pub fn zero(num_vars: usize) -> BinomialIdeal {
        BinomialIdeal {
            num_vars,
            generators: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[PureBinomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<PureBinomial> {
        self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(PureBinomial::is_homogeneous)
    }

    /// Ideal sum: the concatenation of generator lists.
    pub fn sum(&self, other: &BinomialIdeal) -> Result<BinomialIdeal, PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::LengthMismatch);
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(BinomialIdeal {
            num_vars: self.num_vars,
            generators,
        })
    }

    /// Moves variable `i` to `map[i]` inside an ambient of `num_vars` variables.
    pub fn rename(&self, num_vars: usize, map: &[usize]) -> Result<BinomialIdeal, PolyError> {
        if map.len() != self.num_vars {
            return Err(PolyError::LengthMismatch);
        }
        let mut seen = vec![false; num_vars];
        for &target in map {
            if target >= num_vars || std::mem::replace(&mut seen[target], true) {
                return Err(PolyError::InvalidPriority);
            }
        }
        Ok(BinomialIdeal {
            num_vars,
            generators: self
                .generators
                .iter()
                .map(|g| g.rename(num_vars, map))
                .collect(),
        })
    }

    pub fn render(&self, names: &VarNames) -> Vec<String> {
        self.generators.iter().map(|g| g.render(names)).collect()
    }
}

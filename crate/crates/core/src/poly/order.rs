use std::cmp::Ordering;
use std::fmt;

use super::{Monomial, PolyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order together with a variable priority (highest first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<MonomialOrder, PolyError> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= priority.len() || std::mem::replace(&mut seen[v], true) {
                return Err(PolyError::InvalidPriority);
            }
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Lex with `x_0 > x_1 > ...`.
    pub fn lex(num_vars: usize) -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..num_vars).collect(),
        }
    }

    /// Grevlex with `x_0 > x_1 > ...`.
    pub fn grevlex(num_vars: usize) -> MonomialOrder {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: (0..num_vars).collect(),
        }
    }

    /// Grevlex with `var` as the lowest-priority variable and the others in
    /// natural order.
    pub fn grevlex_lowest(num_vars: usize, var: usize) -> MonomialOrder {
        let mut priority: Vec<usize> = (0..num_vars).filter(|&v| v != var).collect();
        priority.push(var);
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn num_vars(&self) -> usize {
        self.priority.len()
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.num_vars() != self.num_vars() || b.num_vars() != self.num_vars() {
            return Err(PolyError::LengthMismatch);
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison for monomials already known to live in this order's ambient.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.num_vars());
        debug_assert_eq!(b.num_vars(), self.num_vars());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Smaller exponent on the last differing low-priority variable wins.
                for &v in self.priority.iter().rev() {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
        };
        write!(f, "{name}{:?}", self.priority)
    }
}

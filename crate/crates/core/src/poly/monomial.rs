use std::fmt;

use super::PolyError;

/// Exponent vector of a monomial over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Monomial {
        Monomial {
            exponents: vec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(num_vars);
        m.exponents[index] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    /// `x^{m+}` and `x^{m-}` of an integer vector `m`.
    pub fn split_signed(m: &[i64]) -> Result<(Monomial, Monomial), PolyError> {
        let conv = |x: i64| u32::try_from(x).map_err(|_| PolyError::Overflow);
        let plus = m
            .iter()
            .map(|&x| conv(x.max(0)))
            .collect::<Result<_, _>>()?;
        let minus = m
            .iter()
            .map(|&x| conv(x.checked_neg().ok_or(PolyError::Overflow)?.max(0)))
            .collect::<Result<_, _>>()?;
        Ok((
            Monomial::from_exponents(plus),
            Monomial::from_exponents(minus),
        ))
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exponents.len(), other.exponents.len());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.checked_add(b).ok_or(PolyError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exponents })
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// `self / divisor * factor`, the rewrite step of a reduction.
    pub fn rewrite(&self, divisor: &Monomial, factor: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert!(divisor.divides(self));
        let exponents = self
            .exponents
            .iter()
            .zip(&divisor.exponents)
            .zip(&factor.exponents)
            .map(|((&a, &d), &f)| (a - d).checked_add(f).ok_or(PolyError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exponents })
    }

    /// Divides out `var^k`.
    pub fn div_var_power(&self, var: usize, k: u32) -> Monomial {
        let mut m = self.clone();
        m.exponents[var] -= k;
        m
    }

    /// Relabels variables: exponent of variable `i` moves to `map[i]` in an
    /// ambient of `num_vars` variables.
    pub fn rename(&self, num_vars: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one(num_vars);
        for (i, &e) in self.exponents.iter().enumerate() {
            out.exponents[map[i]] += e;
        }
        out
    }

    pub fn render(&self, names: &VarNames) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names.name(i)),
                _ => parts.push(format!("{}^{}", names.name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Variable naming scheme for rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarNames {
    /// `x1..xn` at indices `0..n`, then `y1..yn` at `n..2n`.
    EdgeIdeal { n: usize },
    /// `t1..tq`, one per edge.
    Edge,
    /// `x1..xm`.
    Plain,
}

impl VarNames {
    pub fn name(&self, index: usize) -> String {
        match *self {
            VarNames::EdgeIdeal { n } if index < n => format!("x{}", index + 1),
            VarNames::EdgeIdeal { n } => format!("y{}", index - n + 1),
            VarNames::Edge => format!("t{}", index + 1),
            VarNames::Plain => format!("x{}", index + 1),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::Plain))
    }
}

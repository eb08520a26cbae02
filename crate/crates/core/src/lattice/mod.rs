//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels, and the lattice ideal of a sublattice of `Z^q`.

mod matrix;
mod normal_form;

use thiserror::Error;

use crate::poly::{
    ideal_equal, saturate_all, BinomialIdeal, Monomial, MonomialOrder, PolyError, PureBinomial,
};

pub use matrix::IntegerMatrix;
pub use normal_form::{elementary_divisors, hermite_normal_form, rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow")]
    Overflow,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("lattice basis vectors are linearly dependent")]
    DependentBasis,
    #[error("lattice basis does not give homogeneous binomials")]
    NotHomogeneous,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Sublattice of `Z^q` given by a basis (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_dim: usize,
    basis: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<i64>>) -> Result<Lattice, LatticeError> {
        let m = IntegerMatrix::from_row_vectors(ambient_dim, &basis)?;
        if rank(&m)? != basis.len() {
            return Err(LatticeError::DependentBasis);
        }
        Ok(Lattice { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Lattice {
        Lattice {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_row_vectors(self.ambient_dim, &self.basis)
            .expect("basis vectors share the ambient dimension")
    }

    /// `Z^q / L` is torsion-free, i.e. every elementary divisor equals 1.
    pub fn is_saturated(&self) -> Result<bool, LatticeError> {
        Ok(elementary_divisors(&self.basis_matrix())?
            .iter()
            .all(|&d| d == 1))
    }
}

/// A partial character on a lattice. Only the trivial character `ρ ≡ 1` is
/// supported, so binomials built from it always have unit coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialCharacter {
    lattice: Lattice,
}

impl PartialCharacter {
    pub fn trivial(lattice: Lattice) -> PartialCharacter {
        PartialCharacter { lattice }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Value of the character on a lattice vector.
    pub fn value(&self, _m: &[i64]) -> i64 {
        1
    }

    /// `I_+(ρ)`.
    pub fn ideal(&self) -> Result<BinomialIdeal, LatticeError> {
        lattice_ideal(&self.lattice)
    }
}

/// Basis of `{α ∈ Z^q : M α = 0}` for an `n × q` matrix `M`.
///
/// Rows of the unimodular transform of `HNF(Mᵀ)` that meet zero rows of the
/// normal form span the kernel, so the result is always saturated; both facts
/// are asserted.
pub fn integer_kernel_basis(m: &IntegerMatrix) -> Result<Lattice, LatticeError> {
    let t = m.transpose();
    let (h, u) = hermite_normal_form(&t)?;
    let basis: Vec<Vec<i64>> = (0..h.rows())
        .filter(|&r| h.row(r).iter().all(|&x| x == 0))
        .map(|r| u.row(r).to_vec())
        .collect();
    for alpha in &basis {
        assert!(
            m.apply(alpha)?.iter().all(|&x| x == 0),
            "kernel vector {alpha:?} is not annihilated"
        );
    }
    let lattice = Lattice {
        ambient_dim: m.cols(),
        basis,
    };
    assert_eq!(lattice.rank() + rank(m)?, m.cols(), "rank-nullity violated");
    assert!(lattice.is_saturated()?, "integer kernel is not saturated");
    Ok(lattice)
}

/// Binomials `x^{m+} - x^{m-}` for each basis vector `m`.
pub fn lattice_basis_ideal(lattice: &Lattice) -> Result<BinomialIdeal, LatticeError> {
    let generators = lattice
        .basis()
        .iter()
        .map(|m| {
            let (plus, minus) = Monomial::split_signed(m)?;
            Ok(PureBinomial::new(plus, minus)?)
        })
        .collect::<Result<Vec<_>, LatticeError>>()?;
    Ok(BinomialIdeal::new(lattice.ambient_dim(), generators)?)
}

/// Lattice ideal of `lattice` with the trivial character: the basis binomials
/// saturated by the product of all variables. The result is certified to be
/// its own saturation.
pub fn lattice_ideal(lattice: &Lattice) -> Result<BinomialIdeal, LatticeError> {
    let basis_ideal = lattice_basis_ideal(lattice)?;
    if !basis_ideal.is_homogeneous() {
        return Err(LatticeError::NotHomogeneous);
    }
    let ideal = saturate_all(&basis_ideal)?;
    let again = saturate_all(&ideal)?;
    assert!(
        ideal_equal(&again, &ideal, &MonomialOrder::grevlex(ideal.num_vars()))?,
        "lattice ideal is not saturated"
    );
    Ok(ideal)
}

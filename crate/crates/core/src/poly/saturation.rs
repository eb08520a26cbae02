//! Variable saturation `(I : v^∞)` for homogeneous pure-binomial ideals.
//!
//! For a homogeneous ideal and a grevlex order with `v` lowest, `v` divides a
//! basis element iff it divides its lead, and dividing every element of the
//! reduced basis by its largest common power of `v` yields a basis of the
//! saturation. The loop below repeats that step until the reduced basis has
//! no element divisible by `v`.

use super::groebner::reduced_groebner_basis;
use super::{BinomialIdeal, MonomialOrder, PolyError, PureBinomial};

/// One saturation, returning the saturated ideal (as its reduced basis under
/// grevlex with `var` lowest) and whether anything changed.
fn saturate_variable_tracked(
    ideal: &BinomialIdeal,
    var: usize,
) -> Result<(BinomialIdeal, bool), PolyError> {
    if !ideal.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    if var >= ideal.num_vars() {
        return Err(PolyError::LengthMismatch);
    }
    let n = ideal.num_vars();
    let order = MonomialOrder::grevlex_lowest(n, var);
    let mut current = reduced_groebner_basis(ideal, &order)?;
    let mut changed = false;
    loop {
        let mut divided = false;
        let next: Vec<PureBinomial> = current
            .iter()
            .map(|g| match g.common_var_power(var) {
                0 => g.clone(),
                k => {
                    divided = true;
                    PureBinomial::new_unchecked(
                        g.lead().div_var_power(var, k),
                        g.trail().div_var_power(var, k),
                    )
                }
            })
            .collect();
        if !divided {
            // `next` is `current` itself, already a reduced basis: the
            // division step maps the ideal onto itself.
            break;
        }
        changed = true;
        current = reduced_groebner_basis(&BinomialIdeal::new(n, next)?, &order)?;
    }
    debug_assert!(current.iter().all(PureBinomial::is_homogeneous));
    Ok((BinomialIdeal::new(n, current)?, changed))
}

/// `(ideal : x_var^∞)`.
pub fn saturate_variable(ideal: &BinomialIdeal, var: usize) -> Result<BinomialIdeal, PolyError> {
    saturate_variable_tracked(ideal, var).map(|(i, _)| i)
}

/// `(ideal : (x_0 ··· x_{n-1})^∞)`, by saturating each variable in turn until
/// a full pass changes nothing. The result is returned as its reduced basis
/// under the natural grevlex order.
pub fn saturate_all(ideal: &BinomialIdeal) -> Result<BinomialIdeal, PolyError> {
    if !ideal.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    let n = ideal.num_vars();
    let mut current = ideal.clone();
    loop {
        let mut pass_changed = false;
        for var in 0..n {
            let (next, changed) = saturate_variable_tracked(&current, var)?;
            current = next;
            pass_changed |= changed;
        }
        if !pass_changed {
            break;
        }
    }
    let basis = reduced_groebner_basis(&current, &MonomialOrder::grevlex(n))?;
    BinomialIdeal::new(n, basis)
}

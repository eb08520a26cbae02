//! Buchberger's algorithm specialized to pure-difference binomials.
//!
//! The S-polynomial of `a1 - b1` and `a2 - b2` is `(L/a2)·b2 - (L/a1)·b1`
//! with `L = lcm(a1, a2)`, which is again a pure binomial or zero. Reducing a
//! term `m` divisible by a lead `a` replaces it with `(m/a)·b`. Every
//! intermediate value is therefore a pure binomial and the whole computation
//! is plain exponent arithmetic.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::{BinomialIdeal, Monomial, MonomialOrder, OrderKind, PolyError, PureBinomial};

/// Key that sorts lexicographically exactly like `order` sorts monomials.
fn sort_key(order: &MonomialOrder, m: &Monomial) -> Vec<i64> {
    match order.kind() {
        OrderKind::Lex => order
            .priority()
            .iter()
            .map(|&v| i64::from(m.exponent(v)))
            .collect(),
        OrderKind::Grevlex => std::iter::once(m.degree() as i64)
            .chain(
                order
                    .priority()
                    .iter()
                    .rev()
                    .map(|&v| -i64::from(m.exponent(v))),
            )
            .collect(),
    }
}

/// Rewrites `m` with the leads of `basis` until no lead divides it.
fn reduce_monomial(
    mut m: Monomial,
    basis: &[PureBinomial],
    skip: Option<usize>,
) -> Result<Monomial, PolyError> {
    'again: loop {
        for (idx, g) in basis.iter().enumerate() {
            if Some(idx) != skip && g.lead().divides(&m) {
                m = m.rewrite(g.lead(), g.trail())?;
                continue 'again;
            }
        }
        return Ok(m);
    }
}

/// Reduces both terms of `f` against `basis`. The result is zero (`None`) or
/// a pure binomial, oriented under `order`, with no term divisible by any
/// basis lead. Basis elements are re-oriented under `order` first.
pub fn normal_form(
    f: &PureBinomial,
    basis: &[PureBinomial],
    order: &MonomialOrder,
) -> Result<Option<PureBinomial>, PolyError> {
    let basis: Vec<PureBinomial> = basis.iter().map(|g| g.clone().oriented(order)).collect();
    reduce_oriented(f, &basis, order)
}

fn reduce_oriented(
    f: &PureBinomial,
    basis: &[PureBinomial],
    order: &MonomialOrder,
) -> Result<Option<PureBinomial>, PolyError> {
    let a = reduce_monomial(f.lead().clone(), basis, None)?;
    let b = reduce_monomial(f.trail().clone(), basis, None)?;
    Ok(PureBinomial::try_new(a, b).map(|r| r.oriented(order)))
}

fn s_binomial(f: &PureBinomial, g: &PureBinomial) -> Result<Option<PureBinomial>, PolyError> {
    let l = f.lead().lcm(g.lead());
    let left = l.rewrite(g.lead(), g.trail())?;
    let right = l.rewrite(f.lead(), f.trail())?;
    Ok(PureBinomial::try_new(left, right))
}

fn check_pure(b: &PureBinomial) {
    // Substituting 1 for every variable kills every element of a
    // pure-difference ideal; a monomial would survive as 1.
    assert_ne!(b.lead(), b.trail(), "monomial produced by binomial engine");
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairEntry {
    lcm_key: Vec<i64>,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of `ideal` under `order`, sorted ascending by lead
/// (then trail). The zero ideal yields an empty basis.
pub fn reduced_groebner_basis(
    ideal: &BinomialIdeal,
    order: &MonomialOrder,
) -> Result<Vec<PureBinomial>, PolyError> {
    if order.num_vars() != ideal.num_vars() {
        return Err(PolyError::LengthMismatch);
    }
    let mut basis: Vec<PureBinomial> = Vec::new();
    for g in ideal.generators() {
        let g = g.clone().oriented(order);
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    let mut queue = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BinaryHeap<Reverse<PairEntry>>,
                     pending: &mut HashSet<(usize, usize)>,
                     basis: &[PureBinomial],
                     i: usize,
                     j: usize| {
        let l = basis[i].lead().lcm(basis[j].lead());
        queue.push(Reverse(PairEntry {
            lcm_key: sort_key(order, &l),
            i,
            j,
        }));
        pending.insert((i, j));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &basis, i, j);
        }
    }

    while let Some(Reverse(PairEntry { i, j, .. })) = queue.pop() {
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead().is_coprime(fj.lead()) {
            continue;
        }
        let l = fi.lead().lcm(fj.lead());
        let treated = |a: usize, b: usize| !pending.contains(&(a.min(b), a.max(b)));
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && basis[k].lead().divides(&l) && treated(i, k) && treated(j, k)
        });
        if chain {
            continue;
        }
        let Some(s) = s_binomial(fi, fj)? else {
            continue;
        };
        if let Some(r) = reduce_oriented(&s, &basis, order)? {
            check_pure(&r);
            let new = basis.len();
            basis.push(r);
            for k in 0..new {
                push_pair(&mut queue, &mut pending, &basis, k, new);
            }
        }
    }

    interreduce(basis, order)
}

/// Minimalizes a Gröbner basis and puts every trail in normal form.
fn interreduce(
    mut basis: Vec<PureBinomial>,
    order: &MonomialOrder,
) -> Result<Vec<PureBinomial>, PolyError> {
    basis.sort_by(|a, b| cmp_binomial(order, a, b));
    let mut minimal: Vec<PureBinomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lead().divides(g.lead())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let trail = reduce_monomial(minimal[idx].trail().clone(), &minimal, Some(idx))?;
        let g = PureBinomial::try_new(minimal[idx].lead().clone(), trail)
            .expect("trail of a minimal basis element reduced to its own lead");
        debug_assert!(g.is_oriented(order));
        check_pure(&g);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| cmp_binomial(order, a, b));
    Ok(reduced)
}

fn cmp_binomial(order: &MonomialOrder, a: &PureBinomial, b: &PureBinomial) -> Ordering {
    order
        .cmp(a.lead(), b.lead())
        .then_with(|| order.cmp(a.trail(), b.trail()))
}

/// `f ∈ ideal`, decided by reduction against the reduced basis.
pub fn ideal_membership(
    f: &PureBinomial,
    ideal: &BinomialIdeal,
    order: &MonomialOrder,
) -> Result<bool, PolyError> {
    if f.num_vars() != ideal.num_vars() {
        return Err(PolyError::LengthMismatch);
    }
    let basis = reduced_groebner_basis(ideal, order)?;
    Ok(reduce_oriented(f, &basis, order)?.is_none())
}

/// Ideal equality via coincidence of reduced bases.
pub fn ideal_equal(
    a: &BinomialIdeal,
    b: &BinomialIdeal,
    order: &MonomialOrder,
) -> Result<bool, PolyError> {
    if a.num_vars() != b.num_vars() {
        return Err(PolyError::LengthMismatch);
    }
    Ok(reduced_groebner_basis(a, order)? == reduced_groebner_basis(b, order)?)
}

/// Every generator of `a` lies in `b`.
pub fn ideal_contains(
    b: &BinomialIdeal,
    a: &BinomialIdeal,
    order: &MonomialOrder,
) -> Result<bool, PolyError> {
    if a.num_vars() != b.num_vars() {
        return Err(PolyError::LengthMismatch);
    }
    let basis = reduced_groebner_basis(b, order)?;
    for g in a.generators() {
        if reduce_oriented(g, &basis, order)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the defining properties of a reduced Gröbner basis directly:
/// pairwise non-divisible leads, reduced trails, and every S-binomial
/// reducing to zero.
pub fn is_reduced_groebner_basis(
    basis: &[PureBinomial],
    order: &MonomialOrder,
) -> Result<bool, PolyError> {
    for (i, g) in basis.iter().enumerate() {
        if !g.is_oriented(order) {
            return Ok(false);
        }
        for (j, h) in basis.iter().enumerate() {
            if i != j && (h.lead().divides(g.lead()) || h.lead().divides(g.trail())) {
                return Ok(false);
            }
        }
    }
    for j in 0..basis.len() {
        for i in 0..j {
            if let Some(s) = s_binomial(&basis[i], &basis[j])? {
                if reduce_oriented(&s, basis, order)?.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

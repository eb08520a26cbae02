//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p beitoric-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Duration;

use beitoric::edge_ideals::{
    binomial_edge_ideal, edge_binomial, even_cycle_ideal, k2n_ideal, toric_ideal_of_graph,
    toric_k2n_in_edge_ambient, toric_sum_decomposition, x_var, y_var, VertexEmbedding,
};
use beitoric::lattice::{elementary_divisors, hermite_normal_form, integer_kernel_basis};
use beitoric::poly::{
    ideal_contains, ideal_equal, ideal_membership, is_reduced_groebner_basis,
    reduced_groebner_basis, saturate_all, VarNames,
};
use beitoric::sweep::sweep;
use beitoric::{
    BinomialIdeal, Graph, IntegerMatrix, Monomial, MonomialOrder, OrderKind, PureBinomial,
};
use common::{
    all_graphs, brute_equal, brute_even_cycle_count, brute_member, clique_union,
    random_clique_union, random_graph, set_partitions, FormalSum,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_2024;
const SINGLE_THREAD_BUDGET: Duration = Duration::from_secs(300);
const PARALLEL_BUDGET: Duration = Duration::from_secs(60);
const CLIQUE_UNION_SAMPLES: usize = 20;
const CLIQUE_UNION_MAX_N: usize = 10;
const UNION_PAIRS: usize = 100;
const HNF_SAMPLES: usize = 1000;
const HNF_MAX_DIM: usize = 6;
const HNF_ENTRY: i64 = 9;
const KERNEL_MAX_N: usize = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grevlex_equal(a: &BinomialIdeal, b: &BinomialIdeal) -> bool {
    ideal_equal(a, b, &MonomialOrder::grevlex(a.num_vars())).unwrap()
}

fn criterion_1() -> Outcome {
    let single = sweep(5, 1).map_err(|e| e.to_string())?;
    let parallel = sweep(5, 8).map_err(|e| e.to_string())?;
    for s in [&single, &parallel] {
        ensure(s.mismatches.is_empty(), || {
            format!("mismatches: {:?}", s.mismatches)
        })?;
        ensure(s.graphs_checked() == 1 + 2 + 8 + 64 + 1024, || {
            format!("checked {} graphs", s.graphs_checked())
        })?;
    }
    ensure(single.wall_time < SINGLE_THREAD_BUDGET, || {
        format!("single-threaded sweep took {:?}", single.wall_time)
    })?;
    ensure(parallel.wall_time < PARALLEL_BUDGET, || {
        format!("8-way sweep took {:?}", parallel.wall_time)
    })?;
    Ok(format!(
        "{} graphs, 0 mismatches, {:.1}s single-threaded, {:.1}s 8-way",
        single.graphs_checked(),
        single.wall_time.as_secs_f64(),
        parallel.wall_time.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let s = sweep(5, 0).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for n in 3..=5 {
        let partitions = set_partitions(n);
        let expected: BTreeSet<u64> = partitions
            .iter()
            .map(|p| clique_union(n, p).edge_mask())
            .collect();
        ensure(expected.len() == partitions.len(), || {
            "partition graphs collide".into()
        })?;
        let toric: BTreeSet<u64> = (0..1u64 << Graph::pair_count(n))
            .filter(|&m| beitoric::edge_ideals::decide_toric(&Graph::from_edge_mask(n, m)).is_toric)
            .collect();
        ensure(toric == expected, || {
            format!("n={n}: toric graphs differ from clique unions")
        })?;
        let count = s.toric_count(n).unwrap();
        ensure(count == partitions.len() as u64, || {
            format!(
                "n={n}: toric_count {count}, partitions {}",
                partitions.len()
            )
        })?;
        counts.push(count);
    }
    ensure(counts == [5, 15, 52], || format!("counts {counts:?}"))?;
    Ok(format!(
        "toric counts {counts:?} match set-partition enumeration"
    ))
}

fn criterion_3() -> Outcome {
    for n in 2..=6 {
        let j = binomial_edge_ideal(&Graph::complete(n));
        let toric = toric_k2n_in_edge_ambient(n).map_err(|e| e.to_string())?;
        ensure(grevlex_equal(&j, &toric), || {
            format!("n={n}: reduced bases differ")
        })?;
        ensure(brute_equal(j.generators(), toric.generators()), || {
            format!("n={n}: fiber oracle disagrees")
        })?;
    }
    Ok("J_{K_n} = I_{K_{2,n}} for n = 2..6".into())
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut shapes = Vec::new();
    for _ in 0..CLIQUE_UNION_SAMPLES {
        let n = rng.gen_range(2..=CLIQUE_UNION_MAX_N);
        let (g, sizes) = random_clique_union(&mut rng, n);
        let mut sum = BinomialIdeal::zero(2 * n);
        for c in g.connected_components() {
            let block = k2n_ideal(
                c.len(),
                Some(&VertexEmbedding {
                    ambient_n: n,
                    labels: c.clone(),
                }),
            )
            .map_err(|e| e.to_string())?;
            sum = sum.sum(&block).map_err(|e| e.to_string())?;
        }
        ensure(grevlex_equal(&binomial_edge_ideal(&g), &sum), || {
            format!("J_G differs from block sum for {g}")
        })?;
        toric_sum_decomposition(&g).map_err(|e| e.to_string())?;
        shapes.push(sizes);
    }
    Ok(format!(
        "{CLIQUE_UNION_SAMPLES} clique unions, e.g. sizes {:?}",
        shapes[0]
    ))
}

/// Variable map sending `x_a, y_a` of the graph on `m` vertices to
/// `x_old, y_old` on `n` vertices.
fn vertex_var_map(m: usize, n: usize, old_of_new: &[usize]) -> Vec<usize> {
    let mut map = vec![0; 2 * m];
    for (a, &old) in old_of_new.iter().enumerate() {
        map[x_var(m, a + 1)] = x_var(n, old);
        map[y_var(m, a + 1)] = y_var(n, old);
    }
    map
}

fn criterion_5() -> Outcome {
    // (a) isolated vertices
    let mut isolated = 0;
    for g in all_graphs(4) {
        let n = g.n();
        if (1..=n).all(|v| g.degree(v) > 0) {
            continue;
        }
        let (h, map) = g.remove_isolated();
        let mut old_of_new = vec![0; h.n()];
        for (&old, &new) in &map {
            old_of_new[new - 1] = old;
        }
        let lifted = binomial_edge_ideal(&h)
            .rename(2 * n, &vertex_var_map(h.n(), n, &old_of_new))
            .map_err(|e| e.to_string())?;
        let order = MonomialOrder::grevlex(2 * n);
        let a = reduced_groebner_basis(&binomial_edge_ideal(&g), &order).unwrap();
        let b = reduced_groebner_basis(&lifted, &order).unwrap();
        ensure(a == b, || format!("(a) fails for {g}"))?;
        isolated += 1;
    }

    // (b) injectivity at n = 4
    let names = VarNames::EdgeIdeal { n: 4 };
    let bases: BTreeSet<Vec<String>> = (0..64u64)
        .map(|m| {
            let j = binomial_edge_ideal(&Graph::from_edge_mask(4, m));
            reduced_groebner_basis(&j, &MonomialOrder::grevlex(8))
                .unwrap()
                .iter()
                .map(|b| b.render(&names))
                .collect()
        })
        .collect();
    ensure(bases.len() == 64, || {
        format!("(b) only {} distinct bases", bases.len())
    })?;

    // (c) union additivity
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    for _ in 0..UNION_PAIRS {
        let n = rng.gen_range(2..=6);
        let (g1, g2) = (
            random_graph(&mut rng, n, 0.4),
            random_graph(&mut rng, n, 0.4),
        );
        let names = VarNames::EdgeIdeal { n };
        let gens = |g: &Graph| -> BTreeSet<String> {
            binomial_edge_ideal(g)
                .generators()
                .iter()
                .map(|b| b.render(&names))
                .collect()
        };
        let union = gens(&g1.edge_union(&g2).unwrap());
        let expected: BTreeSet<String> = gens(&g1).union(&gens(&g2)).cloned().collect();
        ensure(union == expected, || format!("(c) fails for {g1} and {g2}"))?;
    }

    // (d) complement completes
    let mut complements = 0;
    for g in all_graphs(4) {
        let sum = binomial_edge_ideal(&g)
            .sum(&binomial_edge_ideal(&g.complement()))
            .unwrap();
        ensure(
            grevlex_equal(&sum, &binomial_edge_ideal(&Graph::complete(g.n()))),
            || format!("(d) fails for {g}"),
        )?;
        complements += 1;
    }
    Ok(format!(
        "(a) {isolated} graphs, (b) 64 distinct bases, (c) {UNION_PAIRS} pairs, (d) {complements} graphs"
    ))
}

fn mono(num_vars: usize, vars: &[usize]) -> Monomial {
    let mut e = vec![0; num_vars];
    for &v in vars {
        e[v] += 1;
    }
    Monomial::from_exponents(e)
}

fn criterion_6() -> Outcome {
    let mut triples = 0;
    for n in 3..=5 {
        let nv = 2 * n;
        let (x, y) = (|i| x_var(n, i), |i| y_var(n, i));
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    // y_k (y_i x_j - y_j x_i) - y_j (x_k y_i - x_i y_k) + y_i (x_k y_j - x_j y_k)
                    let mut s = FormalSum::default();
                    s.add(1, &mono(nv, &[y(k), y(i), x(j)]));
                    s.add(-1, &mono(nv, &[y(k), y(j), x(i)]));
                    s.add(-1, &mono(nv, &[y(j), x(k), y(i)]));
                    s.add(1, &mono(nv, &[y(j), x(i), y(k)]));
                    s.add(1, &mono(nv, &[y(i), x(k), y(j)]));
                    s.add(-1, &mono(nv, &[y(i), x(j), y(k)]));
                    ensure(s.is_zero(), || format!("identity fails for ({i},{j},{k})"))?;

                    // The same identity assembled from the engine's own f_uv.
                    let f = |u: usize, v: usize| edge_binomial(n, u, v);
                    let mut t = FormalSum::default();
                    t.add_binomial(-1, &mono(nv, &[y(k)]), &f(i, j));
                    t.add_binomial(-1, &mono(nv, &[y(j)]), &f(k, i));
                    t.add_binomial(1, &mono(nv, &[y(i)]), &f(k, j));
                    ensure(t.is_zero(), || {
                        format!("f_uv identity fails for ({i},{j},{k})")
                    })?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} ordered triples cancel to zero"))
}

fn test_orders(num_vars: usize, rng: &mut StdRng) -> Vec<MonomialOrder> {
    let reversed: Vec<usize> = (0..num_vars).rev().collect();
    let mut shuffled: Vec<usize> = (0..num_vars).collect();
    for i in (1..num_vars).rev() {
        shuffled.swap(i, rng.gen_range(0..=i));
    }
    vec![
        MonomialOrder::grevlex(num_vars),
        MonomialOrder::lex(num_vars),
        MonomialOrder::new(OrderKind::Grevlex, reversed).unwrap(),
        MonomialOrder::new(OrderKind::Lex, shuffled).unwrap(),
    ]
}

fn membership_candidates(n: usize) -> Vec<PureBinomial> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let f = edge_binomial(n, i, j);
            for v in 0..2 * n {
                out.push(f.mul_monomial(&Monomial::var(2 * n, v)).unwrap());
            }
            out.push(f);
        }
    }
    out
}

fn check_pure(basis: &[PureBinomial], order: &MonomialOrder) -> bool {
    basis
        .iter()
        .all(|b| b.lead() != b.trail() && b.is_homogeneous() && b.is_oriented(order))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 7);
    let mut graphs = 0;
    let mut memberships = 0;
    for g in all_graphs(4) {
        let n = g.n();
        let nv = 2 * n;
        let j = binomial_edge_ideal(&g);
        let grevlex = MonomialOrder::grevlex(nv);

        let s = saturate_all(&j).map_err(|e| e.to_string())?;
        let s2 = saturate_all(&s).map_err(|e| e.to_string())?;
        ensure(grevlex_equal(&s, &s2), || {
            format!("saturation not idempotent for {g}")
        })?;
        ensure(ideal_contains(&s, &j, &grevlex).unwrap(), || {
            format!("saturation not extensive for {g}")
        })?;
        ensure(
            j.generators()
                .iter()
                .all(|f| brute_member(f, s.generators())),
            || format!("fiber oracle: J_G not inside its saturation for {g}"),
        )?;
        ensure(check_pure(s.generators(), &grevlex), || {
            format!("saturation output for {g}")
        })?;

        let orders = test_orders(nv, &mut rng);
        let mut variants = vec![j.generators().to_vec()];
        let mut rev = j.generators().to_vec();
        rev.reverse();
        variants.push(
            rev.iter()
                .map(|b| PureBinomial::new(b.trail().clone(), b.lead().clone()).unwrap())
                .collect(),
        );
        let mut dup = j.generators().to_vec();
        dup.extend(j.generators().iter().cloned());
        dup.rotate_left(j.generators().len() / 2);
        variants.push(dup);
        for order in &orders {
            let reference = reduced_groebner_basis(&j, order).unwrap();
            ensure(check_pure(&reference, order), || {
                format!("impure basis for {g}")
            })?;
            ensure(
                is_reduced_groebner_basis(&reference, order).unwrap(),
                || format!("not a reduced basis for {g}"),
            )?;
            for v in &variants {
                let ideal = BinomialIdeal::new(nv, v.clone()).unwrap();
                ensure(
                    reduced_groebner_basis(&ideal, order).unwrap() == reference,
                    || format!("basis depends on input order for {g}"),
                )?;
            }
        }

        for f in membership_candidates(n) {
            let truth = brute_member(&f, j.generators());
            for order in &orders {
                ensure(ideal_membership(&f, &j, order).unwrap() == truth, || {
                    format!(
                        "membership of {} in J_G for {g}",
                        f.render(&VarNames::EdgeIdeal { n })
                    )
                })?;
            }
            memberships += 1;
        }
        graphs += 1;
    }
    Ok(format!(
        "{graphs} graphs, 4 orders, {memberships} membership queries agree with the fiber oracle"
    ))
}

fn criterion_8() -> Outcome {
    let cases = [
        ("C4", Graph::cycle(4)),
        ("C6", Graph::cycle(6)),
        ("C8", Graph::cycle(8)),
        ("K2,2", Graph::complete_bipartite(2, 2)),
        ("K2,3", Graph::complete_bipartite(2, 3)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
    ];
    for (name, g) in &cases {
        let cycles = even_cycle_ideal(g).map_err(|e| e.to_string())?;
        let toric = toric_ideal_of_graph(g).map_err(|e| e.to_string())?;
        ensure(grevlex_equal(&cycles, &toric), || {
            format!("{name}: reduced bases differ")
        })?;
        ensure(brute_equal(cycles.generators(), toric.generators()), || {
            format!("{name}: fiber oracle disagrees")
        })?;
        let found = g.enumerate_even_cycles(g.n()).len();
        let brute = brute_even_cycle_count(g, g.n());
        ensure(found == brute, || {
            format!("{name}: {found} cycles, brute force {brute}")
        })?;
    }
    Ok("C4, C6, C8, K2,2, K2,3, K3,3".into())
}

/// Determinant modulo a prime by Gaussian elimination.
fn det_mod(m: &IntegerMatrix, p: i64) -> i64 {
    let n = m.rows();
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|r| m.row(r).iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let pow = |mut b: i64, mut e: i64| {
        let mut r = 1i64;
        while e > 0 {
            if e & 1 == 1 {
                r = (r as i128 * b as i128 % p as i128) as i64;
            }
            b = (b as i128 * b as i128 % p as i128) as i64;
            e >>= 1;
        }
        r
    };
    let mut det = 1i64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = (det as i128 * a[c][c] as i128 % p as i128) as i64;
        let inv = pow(a[c][c], p - 2);
        for r in c + 1..n {
            let f = (a[r][c] as i128 * inv as i128 % p as i128) as i64;
            let pivot = a[c].clone();
            for (x, &y) in a[r][c..].iter_mut().zip(&pivot[c..]) {
                *x = ((*x as i128 - f as i128 * y as i128).rem_euclid(p as i128)) as i64;
            }
        }
    }
    det
}

fn hnf_shape_ok(h: &IntegerMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for r in 0..h.rows() {
        match h.row(r).iter().position(|&v| v != 0) {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last_pivot.is_some_and(|l| c <= l) {
                    return false;
                }
                let p = h.get(r, c);
                if p <= 0 || (0..r).any(|above| !(0..p).contains(&h.get(above, c))) {
                    return false;
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}

fn criterion_9() -> Outcome {
    const PRIMES: [i64; 3] = [1_000_000_007, 998_244_353, 2_147_483_647];
    let mut rng = StdRng::seed_from_u64(SEED ^ 9);
    for sample in 0..HNF_SAMPLES {
        let (r, c) = (
            rng.gen_range(1..=HNF_MAX_DIM),
            rng.gen_range(1..=HNF_MAX_DIM),
        );
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| rng.gen_range(-HNF_ENTRY..=HNF_ENTRY))
                    .collect()
            })
            .collect();
        let m = IntegerMatrix::from_rows(&rows).unwrap();
        let (h, u) = hermite_normal_form(&m).map_err(|e| format!("sample {sample}: {e}"))?;
        ensure(u.checked_mul(&m).map_err(|e| e.to_string())? == h, || {
            format!("sample {sample}: U*M != H")
        })?;
        ensure(
            u.determinant().map_err(|e| e.to_string())?.abs() == 1,
            || format!("sample {sample}: det U != ±1"),
        )?;
        ensure(
            PRIMES.iter().all(|&p| [1, p - 1].contains(&det_mod(&u, p))),
            || format!("sample {sample}: det U != ±1 modulo a prime"),
        )?;
        ensure(hnf_shape_ok(&h), || {
            format!("sample {sample}: H not in Hermite form")
        })?;
    }

    let mut kernels = 0u64;
    for g in all_graphs(KERNEL_MAX_N) {
        let m = g.incidence_matrix();
        let lattice = integer_kernel_basis(&m).map_err(|e| format!("{g}: {e}"))?;
        let bipartite_components = g
            .connected_components()
            .iter()
            .filter(|c| g.induced(c).is_bipartite())
            .count();
        let expected_rank = g.edge_count() + bipartite_components - g.n();
        ensure(lattice.rank() == expected_rank, || {
            format!(
                "{g}: kernel rank {} expected {expected_rank}",
                lattice.rank()
            )
        })?;
        for v in lattice.basis() {
            ensure(m.apply(v).unwrap().iter().all(|&x| x == 0), || {
                format!("{g}: not in kernel")
            })?;
        }
        if lattice.rank() > 0 {
            let d = elementary_divisors(&lattice.basis_matrix()).unwrap();
            ensure(d.iter().all(|&x| x == 1), || format!("{g}: divisors {d:?}"))?;
        }
        ensure(lattice.is_saturated().unwrap(), || {
            format!("{g}: kernel not saturated")
        })?;
        kernels += 1;
    }
    Ok(format!(
        "{HNF_SAMPLES} random HNFs, {kernels} incidence kernels saturated"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("exhaustive sweep n <= 5", criterion_1),
        ("toric counts are Bell numbers", criterion_2),
        ("complete graph vs K_{2,n} toric ideal", criterion_3),
        ("clique-union decomposition", criterion_4),
        ("edge ideal map properties", criterion_5),
        ("syzygy identity", criterion_6),
        ("engine invariants n <= 4", criterion_7),
        ("even-cycle generation", criterion_8),
        ("lattice layer", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

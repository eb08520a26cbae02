//! Binomial edge ideals `J_G`, the ideals `I_{K_{2,n}}`, even-cycle
//! binomials, toric ideals of graphs, and the toricness decision.
//!
//! Variable layout for the edge-ideal ambient of a graph on `n` vertices:
//! `x_1..x_n` at indices `0..n`, then `y_1..y_n` at `n..2n`. Toric ideals of
//! graphs live in one variable `t_e` per edge, indexed by the canonical edge
//! order.

use thiserror::Error;

use crate::graph::{Cycle, Graph, NonCliqueWitness};
use crate::lattice::{integer_kernel_basis, lattice_ideal, LatticeError};
use crate::poly::{
    ideal_equal, reduced_groebner_basis, saturate_all, BinomialIdeal, MonomialOrder, PolyError,
    PureBinomial, VarNames,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeIdealError {
    #[error("graph is not locally complete: vertex {} has non-adjacent neighbors {} and {}", .0.k, .0.i, .0.j)]
    NotLocallyComplete(NonCliqueWitness),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("cycle of odd length {0}")]
    OddCycle(usize),
    #[error("cycle uses an edge not in the graph")]
    CycleNotInGraph,
    #[error("K_2,n needs n >= 1")]
    EmptyK2n,
    #[error("vertex embedding is not injective or out of range")]
    InvalidEmbedding,
    #[error("internal disagreement: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Index of `x_i` (1-based vertex label) in the `2n`-variable ambient.
pub fn x_var(_n: usize, i: usize) -> usize {
    i - 1
}

/// Index of `y_i` (1-based vertex label) in the `2n`-variable ambient.
pub fn y_var(n: usize, i: usize) -> usize {
    n + i - 1
}

pub fn edge_ideal_names(n: usize) -> VarNames {
    VarNames::EdgeIdeal { n }
}

/// `f_ij = x_i y_j - x_j y_i` in the ambient of a graph on `n` vertices.
pub fn edge_binomial(n: usize, i: usize, j: usize) -> PureBinomial {
    assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j));
    let mut lead = vec![0; 2 * n];
    let mut trail = vec![0; 2 * n];
    lead[x_var(n, i)] = 1;
    lead[y_var(n, j)] = 1;
    trail[x_var(n, j)] = 1;
    trail[y_var(n, i)] = 1;
    PureBinomial::from_exponents(&lead, &trail).expect("distinct terms")
}

/// `J_G`: one generator `f_uv` per edge `{u < v}`, in canonical edge order.
pub fn binomial_edge_ideal(g: &Graph) -> BinomialIdeal {
    let n = g.n();
    let generators = g.edges().map(|(u, v)| edge_binomial(n, u, v)).collect();
    BinomialIdeal::new(2 * n, generators).expect("generators share the ambient")
}

/// Places the vertices `1..=k` of a small graph at the given labels of a
/// graph on `ambient_n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEmbedding {
    pub ambient_n: usize,
    pub labels: Vec<usize>,
}

/// `I_{K_{2,n}} = <f_ij : i < j>` on `n` vertices, optionally embedded.
pub fn k2n_ideal(
    n: usize,
    embedding: Option<&VertexEmbedding>,
) -> Result<BinomialIdeal, EdgeIdealError> {
    if n == 0 {
        return Err(EdgeIdealError::EmptyK2n);
    }
    let (ambient, labels): (usize, Vec<usize>) = match embedding {
        None => (n, (1..=n).collect()),
        Some(e) => {
            let mut sorted = e.labels.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if e.labels.len() != n
                || sorted.len() != n
                || e.labels.iter().any(|&l| l == 0 || l > e.ambient_n)
            {
                return Err(EdgeIdealError::InvalidEmbedding);
            }
            (e.ambient_n, e.labels.clone())
        }
    };
    let mut generators = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            generators.push(edge_binomial(ambient, labels[a], labels[b]));
        }
    }
    Ok(BinomialIdeal::new(2 * ambient, generators)?)
}

/// `T_W`: product of the odd-position edge variables minus the product of the
/// even-position ones along the canonical traversal of `w`. Edge variables are
/// indexed by the canonical edge order of `g`.
pub fn cycle_binomial(w: &Cycle, g: &Graph) -> Result<PureBinomial, EdgeIdealError> {
    if w.len() % 2 == 1 {
        return Err(EdgeIdealError::OddCycle(w.len()));
    }
    let q = g.edge_count();
    let mut odd = vec![0u32; q];
    let mut even = vec![0u32; q];
    for (pos, (u, v)) in w.edges().into_iter().enumerate() {
        let idx = g.edge_index(u, v).ok_or(EdgeIdealError::CycleNotInGraph)?;
        // Positions are 1-based: T_1 is odd.
        if pos % 2 == 0 {
            odd[idx] += 1;
        } else {
            even[idx] += 1;
        }
    }
    Ok(PureBinomial::from_exponents(&odd, &even)?)
}

/// Toric ideal of `g` in its edge variables, as the lattice ideal of the
/// integer kernel of the incidence matrix.
pub fn toric_ideal_of_graph(g: &Graph) -> Result<BinomialIdeal, EdgeIdealError> {
    let kernel = integer_kernel_basis(&g.incidence_matrix())?;
    Ok(lattice_ideal(&kernel)?)
}

/// Ideal generated by the even-cycle binomials of a bipartite graph. Checked
/// against [`toric_ideal_of_graph`] for graphs with at most
/// [`EVEN_CYCLE_CHECK_MAX_EDGES`] edges.
pub fn even_cycle_ideal(g: &Graph) -> Result<BinomialIdeal, EdgeIdealError> {
    if !g.is_bipartite() {
        return Err(EdgeIdealError::NotBipartite);
    }
    let generators = g
        .enumerate_even_cycles(g.n().max(4))
        .iter()
        .map(|w| cycle_binomial(w, g))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = BinomialIdeal::new(g.edge_count(), generators)?;
    if g.edge_count() <= EVEN_CYCLE_CHECK_MAX_EDGES {
        let toric = toric_ideal_of_graph(g)?;
        if !ideal_equal(&ideal, &toric, &MonomialOrder::grevlex(g.edge_count()))? {
            return Err(EdgeIdealError::Disagreement(
                "even-cycle ideal differs from the kernel toric ideal".into(),
            ));
        }
    }
    Ok(ideal)
}

pub const EVEN_CYCLE_CHECK_MAX_EDGES: usize = 16;

/// Variable of `J_{K_n}`'s ambient matched to each edge of
/// `Graph::complete_bipartite(2, n)`: with `s1 = 1`, `s2 = 2` and
/// `t_i = i + 2`, edge `{s1, t_i}` goes to `x_i` and `{s2, t_i}` to `y_i`.
pub fn k2n_edge_correspondence(n: usize) -> Vec<usize> {
    let g = Graph::complete_bipartite(2, n);
    g.edges()
        .map(|(s, t)| match s {
            1 => x_var(n, t - 2),
            2 => y_var(n, t - 2),
            _ => unreachable!("K_2,n edges start at s1 or s2"),
        })
        .collect()
}

/// Toric ideal of `K_{2,n}` transported into the `2n`-variable edge-ideal
/// ambient through [`k2n_edge_correspondence`].
pub fn toric_k2n_in_edge_ambient(n: usize) -> Result<BinomialIdeal, EdgeIdealError> {
    let toric = toric_ideal_of_graph(&Graph::complete_bipartite(2, n))?;
    Ok(toric.rename(2 * n, &k2n_edge_correspondence(n))?)
}

/// A connected component and its block ideal in the full ambient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBlock {
    pub component: Vec<usize>,
    pub ideal: BinomialIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricnessReport {
    pub n: usize,
    pub components: Vec<Vec<usize>>,
    pub is_toric: bool,
    pub witness: Option<NonCliqueWitness>,
    pub verified: Option<bool>,
    pub decomposition: Option<Vec<ComponentBlock>>,
}

impl ToricnessReport {
    /// Attaches the saturation check result, refusing one that contradicts
    /// the combinatorial decision.
    pub fn with_verification(mut self, verified: bool) -> Result<ToricnessReport, EdgeIdealError> {
        if verified != self.is_toric {
            return Err(EdgeIdealError::Disagreement(format!(
                "criterion says toric={}, saturation says lattice={}",
                self.is_toric, verified
            )));
        }
        self.verified = Some(verified);
        Ok(self)
    }
}

/// Decides toricness of `J_G` by local completeness of `g`.
pub fn decide_toric(g: &Graph) -> ToricnessReport {
    let components = g.connected_components();
    match g.is_locally_complete() {
        Ok(()) => ToricnessReport {
            n: g.n(),
            decomposition: Some(component_blocks(g, &components)),
            components,
            is_toric: true,
            witness: None,
            verified: None,
        },
        Err(w) => ToricnessReport {
            n: g.n(),
            components,
            is_toric: false,
            witness: Some(w),
            verified: None,
            decomposition: None,
        },
    }
}

fn component_blocks(g: &Graph, components: &[Vec<usize>]) -> Vec<ComponentBlock> {
    components
        .iter()
        .map(|c| ComponentBlock {
            component: c.clone(),
            ideal: k2n_ideal(
                c.len(),
                Some(&VertexEmbedding {
                    ambient_n: g.n(),
                    labels: c.clone(),
                }),
            )
            .expect("components are nonempty and inside 1..=n"),
        })
        .collect()
}

/// `(J_G : <X, Y>^∞) = J_G`, compared under grevlex.
pub fn verify_lattice(g: &Graph) -> Result<bool, EdgeIdealError> {
    verify_lattice_with(g, &MonomialOrder::grevlex(2 * g.n()))
}

/// [`verify_lattice`] with the final equality test run under `order`.
pub fn verify_lattice_with(g: &Graph, order: &MonomialOrder) -> Result<bool, EdgeIdealError> {
    let j = binomial_edge_ideal(g);
    let saturated = saturate_all(&j)?;
    Ok(ideal_equal(&saturated, &j, order)?)
}

/// Per-component `I_{K_{2,n_i}}` blocks of a locally complete graph, with the
/// equality `J_G = Σ blocks` checked through reduced bases.
pub fn toric_sum_decomposition(g: &Graph) -> Result<Vec<ComponentBlock>, EdgeIdealError> {
    g.is_locally_complete()
        .map_err(EdgeIdealError::NotLocallyComplete)?;
    let blocks = component_blocks(g, &g.connected_components());
    let mut sum = BinomialIdeal::zero(2 * g.n());
    for b in &blocks {
        sum = sum.sum(&b.ideal)?;
    }
    if !ideal_equal(
        &binomial_edge_ideal(g),
        &sum,
        &MonomialOrder::grevlex(2 * g.n()),
    )? {
        return Err(EdgeIdealError::Disagreement(
            "J_G differs from the sum of its K_2,n blocks".into(),
        ));
    }
    Ok(blocks)
}

/// Primality of `J_G` is never computed; it is read off the equivalence with
/// local completeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InferredPrimality {
    InferredPrime,
    InferredNotPrime,
}

/// Truth values of the equivalent toricness conditions for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub locally_complete: bool,
    pub components_complete: bool,
    pub prime: InferredPrimality,
    pub lattice: bool,
    pub toric_sum: bool,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        let v = self.locally_complete;
        self.components_complete == v && self.lattice == v && self.toric_sum == v
    }
}

pub fn equivalence_report(g: &Graph) -> Result<EquivalenceReport, EdgeIdealError> {
    let locally_complete = g.is_locally_complete().is_ok();
    let components_complete = g.components_are_cliques();
    let lattice = verify_lattice(g)?;
    let toric_sum = match toric_sum_decomposition(g) {
        Ok(_) => true,
        Err(EdgeIdealError::NotLocallyComplete(_)) => false,
        Err(e) => return Err(e),
    };
    let report = EquivalenceReport {
        locally_complete,
        components_complete,
        prime: if locally_complete {
            InferredPrimality::InferredPrime
        } else {
            InferredPrimality::InferredNotPrime
        },
        lattice,
        toric_sum,
    };
    if !report.all_agree() {
        return Err(EdgeIdealError::Disagreement(format!("{report:?}")));
    }
    Ok(report)
}

/// Reduced basis of `J_G` under `order`.
pub fn edge_ideal_groebner_basis(
    g: &Graph,
    order: &MonomialOrder,
) -> Result<Vec<PureBinomial>, EdgeIdealError> {
    Ok(reduced_groebner_basis(&binomial_edge_ideal(g), order)?)
}

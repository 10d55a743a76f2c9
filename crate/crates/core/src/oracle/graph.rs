use std::collections::{BTreeMap, BTreeSet};

use crate::model::{CliqueHole, Ring, VertexId};

/// Simple undirected graph given as a union of cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyGraph {
    vertices: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    adjacency: Vec<BTreeSet<usize>>,
    /// Generating cliques, as vertex indices in canonical order.
    cliques: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    /// Union of complete graphs on the given vertex sets.
    pub fn from_cliques<'a, I>(cliques: I) -> Self
    where
        I: IntoIterator<Item = Vec<&'a VertexId>>,
    {
        let cliques: Vec<Vec<&VertexId>> = cliques.into_iter().collect();
        let vertices: Vec<VertexId> = cliques
            .iter()
            .flatten()
            .map(|v| (*v).clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<VertexId, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut adjacency = vec![BTreeSet::new(); vertices.len()];
        let mut clique_ids = Vec::with_capacity(cliques.len());
        for clique in &cliques {
            let mut ids: Vec<usize> = clique.iter().map(|v| index[*v]).collect();
            ids.sort_unstable();
            ids.dedup();
            for (k, &a) in ids.iter().enumerate() {
                for &b in &ids[k + 1..] {
                    adjacency[a].insert(b);
                    adjacency[b].insert(a);
                }
            }
            clique_ids.push(ids);
        }
        Self {
            vertices,
            index,
            adjacency,
            cliques: clique_ids,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn generating_cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Size of the largest generating clique; a lower bound on the
    /// chromatic number.
    pub fn largest_clique_size(&self) -> usize {
        self.cliques.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Vertex-level graph of a hole: the union of its cliques.
pub fn graph_of_hole(hole: &CliqueHole) -> AdjacencyGraph {
    AdjacencyGraph::from_cliques(hole.cliques().iter().map(|c| c.iter().collect()))
}

/// Vertex-level graph of a ring: the union of cliques `A_i ∪ A_{i+1}`.
pub fn graph_of_ring(ring: &Ring) -> AdjacencyGraph {
    let m = ring.m();
    AdjacencyGraph::from_cliques(
        (0..m).map(|i| ring.sector(i).iter().chain(ring.sector(i + 1)).collect()),
    )
}

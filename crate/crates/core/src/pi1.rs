//! Edge-path presentations of the fundamental group of a 2-skeleton.
//!
//! A spanning tree of the basepoint's component collapses; each remaining
//! edge becomes a generator and each 2-simplex contributes the relator read
//! off its three edges. The abelianization of this presentation is an oracle
//! for first homology that shares no code with the chain engine.
//!
//! The presentation is returned raw apart from dropping empty relators; no
//! Tietze simplification is attempted, and nothing beyond the relator
//! construction is claimed about the unabelianized group.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::presentation::{AbelianizationResult, Letter, Presentation, Word};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug)]
pub struct Pi1Presentation {
    pub presentation: Presentation,
    /// Spanning-tree edges, as sorted vertex pairs.
    pub tree_edges: BTreeSet<(usize, usize)>,
    /// One generator per non-tree edge of the basepoint's component, in
    /// lexicographic edge order.
    pub generator_edges: Vec<(usize, usize)>,
    pub basepoint: usize,
}

/// Edge-path presentation of `pi_1` of the basepoint's component.
/// The spanning tree is grown breadth-first, visiting neighbors in
/// ascending vertex order, so the output is deterministic.
pub fn edge_path_presentation(
    complex: &SimplicialComplex,
    basepoint: &str,
) -> Result<Pi1Presentation> {
    let base = complex
        .vertex_by_label(basepoint)
        .ok_or_else(|| Error::MissingVertex(basepoint.to_string()))?;

    let n = complex.n_vertices();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for edge in complex.simplices_of_dim(1) {
        adjacency[edge[0]].push(edge[1]);
        adjacency[edge[1]].push(edge[0]);
    }
    for neighbors in &mut adjacency {
        neighbors.sort_unstable();
    }

    let mut in_component = vec![false; n];
    let mut tree_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    in_component[base] = true;
    queue.push_back(base);
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[v] {
            if !in_component[w] {
                in_component[w] = true;
                tree_edges.insert((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }

    let generator_edges: Vec<(usize, usize)> = complex
        .simplices_of_dim(1)
        .iter()
        .map(|e| (e[0], e[1]))
        .filter(|&(u, v)| in_component[u] && in_component[v])
        .filter(|e| !tree_edges.contains(e))
        .collect();
    let generator_index: BTreeMap<(usize, usize), usize> = generator_edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let names: Vec<String> = generator_edges
        .iter()
        .map(|&(u, v)| format!("e{u}_{v}"))
        .collect();

    // Word of one oriented edge: trivial on the tree, a generator otherwise.
    let edge_word = |from: usize, to: usize| -> Word {
        let key = (from.min(to), from.max(to));
        match generator_index.get(&key) {
            None => Word::empty(),
            Some(&gen) => Word(vec![Letter {
                gen,
                inverse: from > to,
            }]),
        }
    };

    let mut relators = Vec::new();
    for triangle in complex.simplices_of_dim(2) {
        let (u, v, w) = (triangle[0], triangle[1], triangle[2]);
        if !in_component[u] {
            continue;
        }
        let word = edge_word(u, v)
            .concat(&edge_word(v, w))
            .concat(&edge_word(w, u))
            .reduce();
        if !word.is_empty() {
            relators.push(word);
        }
    }

    Ok(Pi1Presentation {
        presentation: Presentation::new(names, relators)?,
        tree_edges,
        generator_edges,
        basepoint: base,
    })
}

/// Abelianized fundamental group of a connected complex; must agree with
/// first homology computed by the chain engine.
pub fn pi1_abelianized(
    complex: &SimplicialComplex,
    basepoint: &str,
) -> Result<AbelianizationResult> {
    let components = complex.connected_components();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(edge_path_presentation(complex, basepoint)?
        .presentation
        .abelianization())
}

use std::collections::HashMap;

use super::generators::GeneratorSet;
use super::matrix::GroupElement;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A right Cayley graph together with the group element behind each vertex.
#[derive(Debug, Clone)]
pub struct CayleyGraph<E> {
    pub graph: Graph,
    /// `labels[v]` is the element at vertex `v`; vertex 0 is the identity.
    pub labels: Vec<E>,
    pub reached_order: usize,
    /// Order of the ambient group when a formula is known (SL(2, Z/qZ) and
    /// products of two copies).
    pub full_group_order: Option<u64>,
}

impl<E: GroupElement> CayleyGraph<E> {
    pub fn generates_full_group(&self) -> Option<bool> {
        self.full_group_order.map(|o| o == self.reached_order as u64)
    }

    /// Label sidecar: one line per vertex, `index entries...`.
    pub fn label_text(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.labels.iter().enumerate() {
            out.push_str(&format!("{i} {}\n", e.label()));
        }
        out
    }
}

/// Enumerates the subgroup generated by `gens` by BFS from the identity over
/// right multiplication `g → g·s`. Vertices are numbered in discovery order;
/// parallel edges are collapsed.
pub fn cayley_graph<E: GroupElement>(gens: &GeneratorSet<E>, order_cap: usize) -> Result<CayleyGraph<E>> {
    let Some(first) = gens.elements().first() else {
        return Err(Error::param("generator set is empty"));
    };
    if gens.elements().iter().any(GroupElement::is_identity) {
        return Err(Error::param("generator set contains the identity"));
    }
    if !gens.is_inverse_closed() {
        return Err(Error::param("generator set is not symmetric"));
    }
    let identity = first.identity_like();
    let mut index: HashMap<E, usize> = HashMap::new();
    let mut labels = vec![identity.clone()];
    index.insert(identity, 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < labels.len() {
        let g = labels[next].clone();
        for s in gens.elements() {
            let h = g.compose(s);
            let j = match index.get(&h) {
                Some(&j) => j,
                None => {
                    if labels.len() >= order_cap {
                        return Err(Error::GroupTooLarge {
                            reached: labels.len(),
                            cap: order_cap,
                        });
                    }
                    let j = labels.len();
                    index.insert(h.clone(), j);
                    labels.push(h);
                    j
                }
            };
            if next < j {
                edges.push((next, j));
            } else if j < next {
                edges.push((j, next));
            }
        }
        next += 1;
    }
    let graph = Graph::from_edges_collapsing(labels.len(), edges);
    Ok(CayleyGraph {
        reached_order: labels.len(),
        full_group_order: first.ambient_order(),
        graph,
        labels,
    })
}

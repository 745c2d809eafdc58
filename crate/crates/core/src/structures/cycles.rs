use std::collections::VecDeque;

use crate::graph::{cyclic_components, strongly_connected_components};
use crate::transduce::{balance_potentials, Transducer};

/// Vertices and edges of a transducer from which some cycle is reachable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreSubgraph {
    /// indexed by state
    pub vertices: Vec<bool>,
    /// indexed like `Transducer::edges`
    pub edges: Vec<bool>,
}

impl CoreSubgraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.iter().filter(|&&v| v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|&&e| e).count()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }
}

fn adjacency(t: &Transducer) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); t.num_states()];
    for e in t.edges() {
        adj[e.from].push(e.to);
    }
    adj
}

/// An edge belongs to the core iff its target does, so nothing outside the
/// core leads back in and every cycle lies inside.
pub fn core_subgraph(t: &Transducer) -> CoreSubgraph {
    let n = t.num_states();
    let adj = adjacency(t);
    let (comp, count) = strongly_connected_components(n, &adj);
    let cyclic = cyclic_components(n, &adj, &comp, count);
    let mut radj = vec![Vec::new(); n];
    for e in t.edges() {
        radj[e.to].push(e.from);
    }
    let mut vertices: Vec<bool> = (0..n).map(|v| cyclic[comp[v]]).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| vertices[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &u in &radj[v] {
            if !vertices[u] {
                vertices[u] = true;
                queue.push_back(u);
            }
        }
    }
    let edges = t.edges().iter().map(|e| vertices[e.to]).collect();
    CoreSubgraph { vertices, edges }
}

/// Length of the longest path made of edges outside the core (the graph of
/// such edges is acyclic). Every accepting path leaves the core only in its
/// last that many steps.
pub fn tail_length(t: &Transducer, core: &CoreSubgraph) -> usize {
    let n = t.num_states();
    let mut out = vec![Vec::new(); n];
    for (i, e) in t.edges().iter().enumerate() {
        if !core.edges[i] {
            out[e.from].push(e.to);
        }
    }
    // longest[v] over the DAG of non-core edges, by iterative post-order
    let mut longest = vec![usize::MAX; n];
    for root in 0..n {
        if longest[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < out[v].len() {
                let w = out[v][*i];
                *i += 1;
                if longest[w] == usize::MAX {
                    stack.push((w, 0));
                }
            } else {
                longest[v] = out[v].iter().map(|&w| longest[w] + 1).max().unwrap_or(0);
                stack.pop();
            }
        }
    }
    longest.into_iter().max().unwrap_or(0)
}

/// True iff every cycle reads as many letters on each tape.
pub fn check_balanced_cycles(t: &Transducer) -> bool {
    balance_potentials(t).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Alphabet, Letter};
    use std::sync::Arc;

    fn al() -> Arc<Alphabet> {
        Arc::new(Alphabet::with_inverses(&["a", "b"]).unwrap())
    }

    fn l(s: &str) -> Option<Letter> {
        Some(al().letter(s).unwrap())
    }

    fn z_generators() -> Transducer {
        crate::fixtures::integer_generators().transducer
    }

    #[test]
    fn acyclic_core_is_empty() {
        let mut t = Transducer::new(al(), 3, 0);
        t.add_edge(0, (l("a"), None), 1);
        t.add_edge(1, (None, l("a")), 2);
        t.add_terminal(2);
        let core = core_subgraph(&t);
        assert!(core.is_empty());
        assert_eq!(tail_length(&t, &core), 2);
        assert!(check_balanced_cycles(&t));
    }

    #[test]
    fn integer_generators_core() {
        let t = z_generators();
        let core = core_subgraph(&t);
        assert_eq!(core.vertices, vec![true, true, true, false]);
        assert_eq!(core.edge_count(), 4);
        assert_eq!(tail_length(&t, &core), 1);
        for (i, e) in t.edges().iter().enumerate() {
            if e.from == e.to {
                assert!(core.edges[i]);
            }
        }
    }

    #[test]
    fn balance_examples() {
        let mut t = Transducer::new(al(), 1, 0);
        t.add_edge(0, (l("a"), l("a")), 0);
        t.add_terminal(0);
        assert!(check_balanced_cycles(&t));
        let mut u = Transducer::new(al(), 1, 0);
        u.add_edge(0, (l("a"), None), 0);
        u.add_terminal(0);
        assert!(!check_balanced_cycles(&u));
    }
}

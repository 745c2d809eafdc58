//! Small directed-graph helpers shared by the automaton modules.

/// Tarjan's algorithm, iterative. Returns the component id of every vertex;
/// ids are assigned in reverse topological order (sink components first).
pub fn strongly_connected_components(n: usize, adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut count = 0;
    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    while let Some(w) = stack.pop() {
                        on_stack[w] = false;
                        comp[w] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
            }
        }
    }
    (comp, count)
}

/// Marks the components that contain a cycle: more than one vertex, or a self-loop.
pub fn cyclic_components(n: usize, adj: &[Vec<usize>], comp: &[usize], count: usize) -> Vec<bool> {
    let mut size = vec![0usize; count];
    let mut cyclic = vec![false; count];
    for v in 0..n {
        size[comp[v]] += 1;
        if adj[v].contains(&v) {
            cyclic[comp[v]] = true;
        }
    }
    for c in 0..count {
        if size[c] > 1 {
            cyclic[c] = true;
        }
    }
    cyclic
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_in_reverse_topological_order() {
        // 0 -> 1 <-> 2 -> 3
        let adj = vec![vec![1], vec![2], vec![1, 3], vec![]];
        let (comp, count) = strongly_connected_components(4, &adj);
        assert_eq!(count, 3);
        assert_eq!(comp[1], comp[2]);
        assert!(comp[3] < comp[1] && comp[1] < comp[0]);
        let cyc = cyclic_components(4, &adj, &comp, count);
        assert!(cyc[comp[1]] && !cyc[comp[0]] && !cyc[comp[3]]);
    }
}

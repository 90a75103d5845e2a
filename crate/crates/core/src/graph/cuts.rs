use super::{norm, Edge, Graph};
use crate::error::{input, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutElements {
    pub cut_vertices: Vec<usize>,
    pub cut_edges: Vec<Edge>,
}

/// Articulation points and bridges of a connected graph (DFS lowpoints).
pub fn cut_elements(g: &Graph) -> Result<CutElements> {
    let n = g.order();
    if !g.is_connected() {
        return input("cut elements are only defined here for connected graphs");
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if *pos < g.neighbors(v).len() {
                let w = g.neighbors(v)[*pos];
                *pos += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(norm(parent, v));
                    }
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    bridges.sort_unstable();
    Ok(CutElements { cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(), cut_edges: bridges })
}

/// One `v`-component: the subgraph induced by a component of `G - v` plus `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VComponent {
    pub graph: Graph,
    /// `vertices[i]` is the original id of local vertex `i`.
    pub vertices: Vec<usize>,
}

impl VComponent {
    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.vertices.binary_search(&original).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VComponentSplit {
    pub cut: usize,
    pub parts: Vec<VComponent>,
}

pub fn v_components(g: &Graph, v: usize) -> Result<VComponentSplit> {
    if v >= g.order() {
        return input(format!("vertex {v} is not in the graph"));
    }
    if !g.is_connected() {
        return input("v-components are only defined here for connected graphs");
    }
    let mut assigned = vec![false; g.order()];
    assigned[v] = true;
    let mut parts = Vec::new();
    for &start in g.neighbors(v) {
        if assigned[start] {
            continue;
        }
        let mut comp = g.component_of(start, Some(v));
        for &w in &comp {
            assigned[w] = true;
        }
        comp.push(v);
        comp.sort_unstable();
        parts.push(VComponent { graph: g.induced(&comp), vertices: comp });
    }
    if parts.len() < 2 {
        return input(format!("vertex {v} is not a cut-vertex"));
    }
    Ok(VComponentSplit { cut: v, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    fn two_k4_bridge() -> Graph {
        let k4 = complete_graph(4).unwrap();
        k4.join(&k4, &[(3, 0)]).unwrap()
    }

    #[test]
    fn bowtie_cut_vertex() {
        let c = cut_elements(&bowtie()).unwrap();
        assert_eq!(c.cut_vertices, vec![2]);
        assert!(c.cut_edges.is_empty());
    }

    #[test]
    fn bridge_between_k4s() {
        let c = cut_elements(&two_k4_bridge()).unwrap();
        assert_eq!(c.cut_edges, vec![(3, 4)]);
        assert_eq!(c.cut_vertices, vec![3, 4]);
    }

    #[test]
    fn cycle_is_two_connected() {
        let c = cut_elements(&cycle_graph(6).unwrap()).unwrap();
        assert!(c.cut_vertices.is_empty() && c.cut_edges.is_empty());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(cut_elements(&g).is_err());
    }

    #[test]
    fn splits() {
        let s = v_components(&bowtie(), 2).unwrap();
        assert_eq!(s.parts.len(), 2);
        assert!(s.parts.iter().all(|p| p.graph == complete_graph(3).unwrap()));

        // K4 and K5 glued at vertex 3
        let mut pairs = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                pairs.push((u, v));
            }
        }
        let k5 = [3, 4, 5, 6, 7];
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((k5[i], k5[j]));
            }
        }
        let g = Graph::from_edges(8, &pairs).unwrap();
        let s = v_components(&g, 3).unwrap();
        let mut orders: Vec<usize> = s.parts.iter().map(|p| p.graph.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![4, 5]);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = v_components(&p3, 1).unwrap();
        assert!(s.parts.iter().all(|p| p.graph.order() == 2 && p.graph.size() == 1));

        assert!(v_components(&cycle_graph(5).unwrap(), 0).is_err());
    }
}

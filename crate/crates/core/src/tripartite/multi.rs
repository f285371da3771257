/// A hypergraph on vertices `0..vertex_count` whose edges may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl MultiHypergraph {
    /// Panics if an edge names a vertex outside `0..vertex_count`.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Self {
        assert!(edges.iter().flatten().all(|&v| v < vertex_count));
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        MultiHypergraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edge ids incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }
}

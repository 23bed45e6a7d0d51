//! Breadth-first search on a finite window of the Farey graph.
//!
//! Vertices are reduced `p/q` with `0 < q <= bound` and `|p| <= bound`, plus
//! `1/0`. Edges join slopes whose determinant is ±1. Distances inside the
//! window are upper bounds for the true metric; a margin around the tested
//! range makes them exact for geodesics that stay near their endpoints.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

pub struct FareyOracle {
    vertices: Vec<(i64, i64)>,
    index: HashMap<(i64, i64), usize>,
    adjacency: Vec<Vec<usize>>,
}

impl FareyOracle {
    pub fn new(bound: i64) -> FareyOracle {
        let mut vertices = vec![(1, 0)];
        for q in 1..=bound {
            for p in -bound..=bound {
                if p.gcd(&q) == 1 {
                    vertices.push((p, q));
                }
            }
        }
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let ((a, b), (c, d)) = (vertices[i], vertices[j]);
                if (a * d - b * c).abs() == 1 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        FareyOracle {
            vertices,
            index,
            adjacency,
        }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    /// Distances from `(p, q)` to every vertex, indexed like [`Self::vertices`].
    pub fn distances_from(&self, p: i64, q: i64) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        let start = self.index[&(p, q)];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: (i64, i64), b: (i64, i64)) -> Option<u32> {
        self.distances_from(a.0, a.1)[self.index[&b]]
    }
}

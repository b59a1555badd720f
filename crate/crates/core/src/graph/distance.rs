use std::collections::VecDeque;

use super::Graph;

/// Anything that can report hop distances between vertices `0..order()`.
///
/// `None` means unreachable; two unreachable distances compare equal and an
/// unreachable distance never equals a finite one.
pub trait Metric {
    fn order(&self) -> usize;
    fn distance(&self, u: usize, v: usize) -> Option<u32>;
}

/// Dense all-pairs distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.order();
        let mut data = vec![None; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for source in 0..n {
            let row = &mut data[source * n..(source + 1) * n];
            row[source] = Some(0);
            queue.clear();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let du = row[u].expect("queued vertices are reached");
                for &v in g.neighbors(u) {
                    if row[v].is_none() {
                        row[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

impl Metric for DistanceMatrix {
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.get(u, v)
    }
}

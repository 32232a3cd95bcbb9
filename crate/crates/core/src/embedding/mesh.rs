use std::collections::HashMap;

/// Triangulated surface of revolution: north pole first, then `n_s - 1`
/// rings of `n_theta` vertices ordered by increasing `s` and angle, then
/// the south pole. Triangles are wound so normals point outward.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
    pub n_s: usize,
    pub n_theta: usize,
}

impl Mesh {
    /// Directed edge multiplicities.
    fn directed_edges(&self) -> HashMap<(u32, u32), usize> {
        let mut edges = HashMap::with_capacity(self.triangles.len() * 3);
        for t in &self.triangles {
            for i in 0..3 {
                *edges.entry((t[i], t[(i + 1) % 3])).or_insert(0) += 1;
            }
        }
        edges
    }

    /// Every edge is shared by exactly two triangles that traverse it in
    /// opposite directions, and no triangle is degenerate in its indices.
    pub fn is_watertight(&self) -> bool {
        let n = self.vertices.len() as u32;
        if self
            .triangles
            .iter()
            .any(|t| t.iter().any(|&i| i >= n) || t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        {
            return false;
        }
        let edges = self.directed_edges();
        edges.iter().all(|(&(a, b), &count)| count == 1 && edges.get(&(b, a)) == Some(&1))
    }

    pub fn edge_count(&self) -> usize {
        let mut undirected: Vec<(u32, u32)> = self
            .triangles
            .iter()
            .flat_map(|t| (0..3).map(move |i| (t[i].min(t[(i + 1) % 3]), t[i].max(t[(i + 1) % 3]))))
            .collect();
        undirected.sort_unstable();
        undirected.dedup();
        undirected.len()
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.triangles.len() as i64
    }

    /// Enclosed volume by the divergence theorem; positive for outward
    /// winding.
    pub fn signed_volume(&self) -> f64 {
        self.triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.map(|i| self.vertices[i as usize]);
                a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                    + a[2] * (b[0] * c[1] - b[1] * c[0])
            })
            .sum::<f64>()
            / 6.0
    }

    /// Unnormalized normal of triangle `i`.
    pub fn face_normal(&self, i: usize) -> [f64; 3] {
        let [a, b, c] = self.triangles[i].map(|k| self.vertices[k as usize]);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
    }

    /// Index of ring vertex `k` on ring `j` (`0 ≤ j < n_s - 1`).
    pub fn ring_vertex(&self, j: usize, k: usize) -> usize {
        1 + j * self.n_theta + k % self.n_theta
    }
}

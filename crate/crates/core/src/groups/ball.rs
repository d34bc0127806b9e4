//! Finite Cayley-graph balls.
//!
//! A ball of radius `R` holds exactly the elements of word length `<= R`,
//! with generator-labelled edges between both-inside endpoints. Vertices are
//! ordered shortlex, which makes every downstream enumeration deterministic.
//! Construction is a sphere-by-sphere sweep; normal forms are prefix-closed
//! for all supported kinds, so each sphere arises from the previous one, and
//! the sweep cross-checks that BFS depth equals normal-form length.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groups::{Element, GroupSpec, Letter};

pub const DEFAULT_VERTEX_BUDGET: usize = 2_000_000;

#[derive(Debug, Clone)]
pub struct CayleyBall {
    spec: GroupSpec,
    radius: usize,
    vertices: Vec<Element>,
    index: HashMap<Element, usize>,
    adj: Vec<Vec<usize>>,
    sphere: Vec<usize>,
    edge_count: usize,
}

/// A within-ball BFS distance together with its exactness certificate.
/// `exact` is set when either `|a| + |b| <= R` (every group geodesic then
/// stays inside the ball) or the distance equals `||a| - |b||` (a universal
/// lower bound that the ball attains). Otherwise the distance is an upper
/// bound for the group distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordDistance {
    pub distance: usize,
    pub exact: bool,
}

impl CayleyBall {
    pub fn build(spec: &GroupSpec, radius: usize) -> Result<CayleyBall> {
        Self::build_with_budget(spec, radius, DEFAULT_VERTEX_BUDGET)
    }

    pub fn build_with_budget(
        spec: &GroupSpec,
        radius: usize,
        budget: usize,
    ) -> Result<CayleyBall> {
        let letters: Vec<Letter> = spec.letters();
        let mut spheres: Vec<Vec<Element>> = vec![vec![spec.identity()]];
        let mut seen: HashMap<Element, usize> = HashMap::new();
        seen.insert(spec.identity(), 0);
        let mut total = 1usize;

        for k in 0..radius {
            let mut next: Vec<Element> = Vec::new();
            for g in &spheres[k] {
                for &s in &letters {
                    let h = apply_letter(spec, g, s);
                    let hl = h.len();
                    if hl == k + 1 {
                        if !seen.contains_key(&h) {
                            total += 1;
                            if total > budget {
                                return Err(Error::BudgetExceeded { budget, radius });
                            }
                            seen.insert(h.clone(), k + 1);
                            next.push(h);
                        }
                    } else if hl <= k {
                        match seen.get(&h) {
                            Some(&d) if d == hl => {}
                            _ => {
                                return Err(Error::BadGroupSpec(format!(
                                    "normal forms are not geodesic: `{}` at BFS depth {} has length {}",
                                    spec.format_element(&h),
                                    k + 1,
                                    hl
                                )))
                            }
                        }
                    } else {
                        return Err(Error::BadGroupSpec(format!(
                            "one generator step changed word length by more than one at `{}`",
                            spec.format_element(&h)
                        )));
                    }
                }
            }
            next.sort();
            next.dedup();
            spheres.push(next);
        }

        let mut vertices: Vec<Element> = Vec::with_capacity(total);
        let mut sphere: Vec<usize> = Vec::with_capacity(total);
        for (k, s) in spheres.iter().enumerate() {
            for e in s {
                vertices.push(e.clone());
                sphere.push(k);
            }
        }
        let index: HashMap<Element, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();

        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        let mut edge_count = 0usize;
        for (i, g) in vertices.iter().enumerate() {
            for &s in &letters {
                let h = apply_letter(spec, g, s);
                if h.len() <= radius {
                    let j = index[&h];
                    if j != i {
                        adj[i].push(j);
                    }
                }
            }
        }
        for (i, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            nbrs.dedup();
            edge_count += nbrs.iter().filter(|&&j| j > i).count();
        }

        Ok(CayleyBall {
            spec: spec.clone(),
            radius,
            vertices,
            index,
            adj,
            sphere,
            edge_count,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn element(&self, id: usize) -> &Element {
        &self.vertices[id]
    }

    pub fn id_of(&self, e: &Element) -> Result<usize> {
        self.index.get(e).copied().ok_or_else(|| Error::NotInBall {
            element: self.spec.format_element(e),
        })
    }

    /// The identity vertex; always id 0 in shortlex order.
    pub fn basepoint(&self) -> usize {
        0
    }

    /// Word length of the vertex, i.e. its BFS distance from the basepoint.
    pub fn sphere_index(&self, id: usize) -> usize {
        self.sphere[id]
    }

    pub fn is_interior(&self, id: usize) -> bool {
        self.sphere[id] < self.radius
    }

    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adj[id]
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Unordered edges `(i, j)` with `i < j`, in deterministic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// BFS distances from one vertex to all vertices, within the ball.
    pub fn bfs(&self, start: usize) -> Vec<usize> {
        self.bfs_multi(std::slice::from_ref(&start))
    }

    /// BFS distances from a vertex set (distance to the nearest source).
    pub fn bfs_multi(&self, starts: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        let mut queue = std::collections::VecDeque::new();
        for &s in starts {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Within-ball BFS distance with the exactness certificate described on
    /// [`WordDistance`].
    pub fn word_distance(&self, a: &Element, b: &Element) -> Result<WordDistance> {
        let ia = self.id_of(a)?;
        let ib = self.id_of(b)?;
        Ok(self.word_distance_ids(ia, ib))
    }

    pub fn word_distance_ids(&self, ia: usize, ib: usize) -> WordDistance {
        let distance = self.bfs(ia)[ib];
        debug_assert_ne!(distance, usize::MAX, "balls are connected");
        let sa = self.sphere[ia];
        let sb = self.sphere[ib];
        let exact = sa + sb <= self.radius || distance == sa.abs_diff(sb);
        WordDistance { distance, exact }
    }
}

fn apply_letter(spec: &GroupSpec, g: &Element, s: Letter) -> Element {
    let mut w: Vec<Letter> = Vec::with_capacity(g.len() + 1);
    w.extend_from_slice(g.word());
    w.push(s);
    spec.normal_form(&w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;

    /// Independent lattice-ball oracle for Z^2: all integer points with
    /// |x| + |y| <= r, distances by taxicab metric.
    fn lattice_ball(r: i64) -> Vec<(i64, i64)> {
        let mut pts = Vec::new();
        for x in -r..=r {
            for y in -r..=r {
                if x.abs() + y.abs() <= r {
                    pts.push((x, y));
                }
            }
        }
        pts
    }

    #[test]
    fn line_ball_counts() {
        let z = GroupSpec::free(1).unwrap();
        let ball = CayleyBall::build(&z, 3).unwrap();
        assert_eq!(ball.vertex_count(), 7);
        assert_eq!(ball.edge_count(), 6);
    }

    #[test]
    fn free_two_ball_counts() {
        let f2 = GroupSpec::free(2).unwrap();
        let ball = CayleyBall::build(&f2, 2).unwrap();
        // spheres 1, 4, 12
        assert_eq!(ball.vertex_count(), 17);
        let per_sphere: Vec<usize> = (0..=2)
            .map(|k| (0..ball.vertex_count()).filter(|&i| ball.sphere_index(i) == k).count())
            .collect();
        assert_eq!(per_sphere, vec![1, 4, 12]);
    }

    #[test]
    fn abelian_ball_matches_lattice_oracle() {
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let ball = CayleyBall::build(&z2, 2).unwrap();
        assert_eq!(ball.vertex_count(), lattice_ball(2).len());
        assert_eq!(ball.vertex_count(), 13);
    }

    #[test]
    fn sphere_index_equals_normal_form_length() {
        for spec in [
            GroupSpec::free(2).unwrap(),
            GroupSpec::free_abelian(2).unwrap(),
            GroupSpec::free_product(vec![
                GroupSpec::free(1).unwrap(),
                GroupSpec::free_abelian(2).unwrap(),
            ])
            .unwrap(),
        ] {
            let ball = CayleyBall::build(&spec, 3).unwrap();
            for i in 0..ball.vertex_count() {
                assert_eq!(ball.sphere_index(i), ball.element(i).len());
            }
        }
    }

    #[test]
    fn ball_monotone_in_radius() {
        let spec = GroupSpec::free_product(vec![
            GroupSpec::free(1).unwrap(),
            GroupSpec::free_abelian(2).unwrap(),
        ])
        .unwrap();
        let small = CayleyBall::build(&spec, 2).unwrap();
        let big = CayleyBall::build(&spec, 3).unwrap();
        for v in small.vertices() {
            assert!(big.id_of(v).is_ok());
        }
        for (i, j) in small.edges() {
            let bi = big.id_of(small.element(i)).unwrap();
            let bj = big.id_of(small.element(j)).unwrap();
            assert!(big.contains_edge(bi, bj));
        }
    }

    #[test]
    fn word_distance_examples() {
        let z = GroupSpec::free(1).unwrap();
        let ball = CayleyBall::build(&z, 5).unwrap();
        let a = z.parse_word("a^2").unwrap();
        let b = z.parse_word("a^-1").unwrap();
        let d = ball.word_distance(&a, &b).unwrap();
        assert_eq!(d, WordDistance { distance: 3, exact: true });

        let f2 = GroupSpec::free(2).unwrap();
        let ball = CayleyBall::build(&f2, 3).unwrap();
        let ab = f2.parse_word("a b").unwrap();
        let a = f2.parse_word("a").unwrap();
        let d = ball.word_distance(&ab, &a).unwrap();
        assert_eq!(d, WordDistance { distance: 1, exact: true });
    }

    #[test]
    fn word_distance_certificate_is_conservative() {
        // (2,0) to (0,2) in the radius-2 ball: distance 4 is correct (the
        // path through (1,1) stays inside), but neither certificate applies,
        // so the flag stays off until the |a|+|b| <= R witness kicks in.
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let a = z2.parse_word("a^2").unwrap();
        let b = z2.parse_word("b^2").unwrap();
        for (radius, want_exact) in [(2, false), (3, false), (4, true)] {
            let ball = CayleyBall::build(&z2, radius).unwrap();
            let d = ball.word_distance(&a, &b).unwrap();
            assert_eq!(d.distance, 4, "radius {radius}");
            assert_eq!(d.exact, want_exact, "radius {radius}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f2 = GroupSpec::free(2).unwrap();
        let err = CayleyBall::build_with_budget(&f2, 5, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 100, .. }), "{err}");
    }

    #[test]
    fn ball_is_connected_and_has_expected_neighbors() {
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let ball = CayleyBall::build(&z2, 2).unwrap();
        let dist = ball.bfs(ball.basepoint());
        assert!(dist.iter().all(|&d| d != usize::MAX));
        // every vertex at length <= R-1 has all four neighbors present
        for i in 0..ball.vertex_count() {
            if ball.sphere_index(i) <= 1 {
                assert_eq!(ball.neighbors(i).len(), 4);
            }
        }
    }

    #[test]
    fn rewriting_ball_matches_builtin() {
        let rules: Vec<(String, String)> = [
            ("b a", "a b"),
            ("b a^-1", "a^-1 b"),
            ("b^-1 a", "a b^-1"),
            ("b^-1 a^-1", "a^-1 b^-1"),
        ]
        .iter()
        .map(|(l, r)| (l.to_string(), r.to_string()))
        .collect();
        let rw = GroupSpec::rewriting(vec!["a".into(), "b".into()], &rules).unwrap();
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let b1 = CayleyBall::build(&rw, 3).unwrap();
        let b2 = CayleyBall::build(&z2, 3).unwrap();
        assert_eq!(b1.vertex_count(), b2.vertex_count());
        assert_eq!(b1.edge_count(), b2.edge_count());
        assert_eq!(b1.vertices(), b2.vertices());
    }
}

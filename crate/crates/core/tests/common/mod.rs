#![allow(dead_code)]

use heptad::classifier::{
    canonical_cyclic_numeration, decoration_of, dominance_coloring, dominance_indices, dominance_matrix,
    heptagonal_region, Dominance, EdgeDecoration,
};
use heptad::configuration::{adjacency_graph, Configuration};
use heptad::geometry::HomPoint;
use heptad::{Config, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn affine(pts: &[(i64, i64)]) -> Config {
    Configuration::new(pts.iter().map(|&(x, y)| HomPoint::from_i64(x, y, 1).unwrap()).collect()).unwrap()
}

pub fn random_config<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Option<Config> {
    let pts = (0..n)
        .map(|_| HomPoint::from_i64(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound), 1).unwrap())
        .collect();
    Configuration::new(pts).ok()
}

pub fn random_typical<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Config {
    loop {
        if let Some(c) = random_config(rng, n, bound).filter(|c| c.is_typical()) {
            return c;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R) -> [[BigInt; 3]; 3] {
    loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-6..=6)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            return m.map(|r| r.map(BigInt::from));
        }
    }
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn coords(p: &Point) -> [Q; 3] {
    p.coords().clone().map(Q::from_integer)
}

/// Null vector of a 5×6 rational system, by row reduction.
fn null_vector(mut rows: Vec<[Q; 6]>) -> Option<[Q; 6]> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..6 {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else { continue };
        rows.swap(r, k);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..rows.len() {
            if k != r && !rows[k][col].is_zero() {
                let f = rows[k][col].clone();
                let pr = rows[r].clone();
                for (x, y) in rows[k].iter_mut().zip(pr.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() != 5 {
        return None;
    }
    let free = (0..6).find(|c| !pivots.contains(c))?;
    let mut v: [Q; 6] = std::array::from_fn(|_| Q::zero());
    v[free] = Q::one();
    for (i, &pc) in pivots.iter().enumerate() {
        v[pc] = -rows[i][free].clone();
    }
    Some(v)
}

/// Symmetric form of the conic through five points, or `None` if the points
/// do not determine a unique conic.
pub fn oracle_conic(five: [&Point; 5]) -> Option<[[Q; 3]; 3]> {
    let rows = five
        .iter()
        .map(|p| {
            let [x, y, z] = coords(p);
            [&x * &x, &y * &y, &z * &z, &x * &y, &x * &z, &y * &z]
        })
        .collect();
    let [a, b, c, d, e, f] = null_vector(rows)?;
    let h = Q::new(1.into(), 2.into());
    Some([
        [a, &d * &h, &e * &h],
        [&d * &h, b, &f * &h],
        [&e * &h, &f * &h, c],
    ])
}

pub fn eval_form(m: &[[Q; 3]; 3], v: &[Q; 3]) -> Q {
    let mut s = Q::zero();
    for i in 0..3 {
        for j in 0..3 {
            s += &m[i][j] * &v[i] * &v[j];
        }
    }
    s
}

/// A point on the disc side of a nondegenerate real conic: diagonalize the
/// form by congruence and take the basis vector whose diagonal entry has the
/// minority sign, like `(0:0:1)` for `x² + y² − z²`. `None` for degenerate
/// or empty conics.
pub fn interior_witness(m: &[[Q; 3]; 3]) -> Option<[Q; 3]> {
    let mut basis: Vec<[Q; 3]> = (0..3).map(|i| std::array::from_fn(|j| if i == j { Q::one() } else { Q::zero() })).collect();
    let form = |a: &[[Q; 3]; 3], u: &[Q; 3], v: &[Q; 3]| -> Q {
        let mut s = Q::zero();
        for i in 0..3 {
            for j in 0..3 {
                s += &a[i][j] * &u[i] * &v[j];
            }
        }
        s
    };
    let orig = m.clone();
    let mut diag = Vec::new();
    let mut out: Vec<[Q; 3]> = Vec::new();
    while !basis.is_empty() {
        let idx = basis.iter().position(|b| !form(&orig, b, b).is_zero());
        let pivot = match idx {
            Some(i) => basis.remove(i),
            None => {
                let (i, j) = (0..basis.len())
                    .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !form(&orig, &basis[i], &basis[j]).is_zero())?;
                let s: [Q; 3] = std::array::from_fn(|k| &basis[i][k] + &basis[j][k]);
                basis[i] = s;
                continue;
            }
        };
        let pp = form(&orig, &pivot, &pivot);
        for b in basis.iter_mut() {
            let f = form(&orig, &pivot, b) / &pp;
            *b = std::array::from_fn(|k| &b[k] - &f * &pivot[k]);
        }
        diag.push(pp);
        out.push(pivot);
    }
    if diag.len() != 3 || diag.iter().any(|d| d.is_zero()) {
        return None;
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let minority_positive = match pos {
        1 => true,
        2 => false,
        _ => return None,
    };
    let i = diag.iter().position(|d| d.is_positive() == minority_positive)?;
    Some(out[i].clone())
}

/// `Some(true)` inside, `Some(false)` outside, `None` on the conic.
pub fn oracle_inside(five: [&Point; 5], p: &Point) -> Option<bool> {
    let m = oracle_conic(five)?;
    let w = interior_witness(&m)?;
    let v = eval_form(&m, &coords(p));
    if v.is_zero() {
        return None;
    }
    Some(v.is_positive() == eval_form(&m, &w).is_positive())
}

/// Adjacency graph edges by locating line crossings on each chord in the
/// affine chart `z = 1`. Every point must be affine.
pub fn oracle_edges(c: &Config) -> Vec<(usize, usize)> {
    let n = c.len();
    let aff: Vec<[Q; 2]> = c
        .points()
        .iter()
        .map(|p| {
            let [x, y, z] = coords(p);
            assert!(!z.is_zero(), "point at infinity");
            [&x / &z, &y / &z]
        })
        .collect();
    let cross = |u: &[Q; 2], v: &[Q; 2]| &u[0] * &v[1] - &u[1] * &v[0];
    let sub = |u: &[Q; 2], v: &[Q; 2]| [&u[0] - &v[0], &u[1] - &v[1]];
    let mut edges = Vec::new();
    for p in 0..n {
        for r in p + 1..n {
            let d = sub(&aff[r], &aff[p]);
            let mut inside = 0;
            let mut outside = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if [a, b].contains(&p) || [a, b].contains(&r) {
                        continue;
                    }
                    let e = sub(&aff[b], &aff[a]);
                    let den = cross(&d, &e);
                    let t_inside = if den.is_zero() {
                        false
                    } else {
                        let t = cross(&sub(&aff[a], &aff[p]), &e) / den;
                        t > Q::zero() && t < Q::one()
                    };
                    if t_inside {
                        inside += 1;
                    } else {
                        outside += 1;
                    }
                }
            }
            if inside == 0 || outside == 0 {
                edges.push((p, r));
            }
        }
    }
    edges
}

/// Projective image of `c` with every point affine, under a random matrix.
pub fn random_chart<R: Rng>(rng: &mut R, c: &Config) -> Config {
    loop {
        let m = random_matrix(rng);
        if let Ok(t) = c.transform(&m) {
            if t.points().iter().all(|p| !p.coords()[2].is_zero()) {
                return t;
            }
        }
    }
}

/// Violations of the heptagonal identities on one heptagonal configuration.
pub fn heptagonal_violations(c: &Config) -> Vec<String> {
    let mut bad = Vec::new();
    let order = match canonical_cyclic_numeration(c) {
        Ok(o) => o,
        Err(e) => return vec![format!("numeration: {e}")],
    };
    let m = dominance_matrix(c).unwrap();
    let d = dominance_indices(&m);
    let seq: Vec<usize> = order.iter().map(|&l| d.0[l]).collect();
    if seq != [6, 1, 4, 3, 2, 5, 0] {
        bad.push(format!("d-sequence {seq:?}"));
    }
    let mut multiset = d.0;
    multiset.sort();
    if multiset != [0, 1, 2, 3, 4, 5, 6] {
        bad.push(format!("indices {:?}", d.0));
    }
    let p = |i: usize| order[i % 7];
    for i in 0..7 {
        for j in 0..7 {
            if j == i || j == (i + 1) % 7 {
                continue;
            }
            if m.get(p(i), p(j)) + m.get(p(i + 1), p(j)) != 1 {
                bad.push(format!("complementary dominance at i={i} j={j}"));
            }
        }
        if m.get(p(i), p(i + 1)) != m.get(p(i + 1), p(i)) && !special_edge(&d.0, p(i), p(i + 1)) {
            bad.push(format!("asymmetric non-special edge at i={i}"));
        }
        if ![0, 6].contains(&d.0[p(i)]) && m.get(p(i + 6), p(i)) == m.get(p(i), p(i + 1)) {
            bad.push(format!("dominance does not alternate at i={i}"));
        }
    }
    let decos: Vec<EdgeDecoration> = (0..7).map(|i| decoration_of(&m, p(i), p(i + 1))).collect();
    let specials: Vec<usize> = (0..7).filter(|&i| matches!(decos[i], EdgeDecoration::Special { .. })).collect();
    if specials.len() != 1 {
        bad.push(format!("{} special edges", specials.len()));
    } else {
        let s = specials[0];
        if let EdgeDecoration::Special { from, to } = decos[s] {
            if d.0[from] != 0 || d.0[to] != 6 {
                bad.push(format!("special edge {from}->{to}"));
            }
        }
        for k in 1..6 {
            let (x, y) = (&decos[(s + k) % 7], &decos[(s + k + 1) % 7]);
            if x == y {
                bad.push(format!("decorations do not alternate at {k}"));
            }
        }
    }
    for i in 0..7 {
        let sum = d.0[p(i)] + d.0[p(i + 1)];
        let want = match decos[i] {
            EdgeDecoration::Internal => 5,
            EdgeDecoration::External => 7,
            EdgeDecoration::Special { .. } => 6,
        };
        if sum != want {
            bad.push(format!("edge {i} sum {sum} with {:?}", decos[i]));
        }
    }
    for marked in 0..7 {
        match heptagonal_region(c, marked) {
            Ok(r) => {
                if d.0[marked] == 6 && r != 0 {
                    bad.push(format!("marked {marked} with d=6 in region {r}"));
                }
                if d.0[marked] == 0 && r != 6 {
                    bad.push(format!("marked {marked} with d=0 in region {r}"));
                }
            }
            Err(e) => bad.push(format!("region of {marked}: {e}")),
        }
    }
    bad
}

fn special_edge(d: &[usize; 7], a: usize, b: usize) -> bool {
    let mut e = [d[a], d[b]];
    e.sort();
    e == [0, 6]
}

/// Γ-edges of a typical cyclic 6-configuration joining equal colors.
pub fn cyclic_edge_violations(c: &Config) -> usize {
    let colors = dominance_coloring(c).unwrap();
    adjacency_graph(c)
        .unwrap()
        .edges()
        .iter()
        .filter(|&&(a, b)| (colors[a] == Dominance::Dominant) == (colors[b] == Dominance::Dominant))
        .count()
}

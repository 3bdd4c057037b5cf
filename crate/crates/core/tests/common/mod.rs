//! Brute-force oracles over dense structure constants.
//!
//! Nothing here calls the library's checkers, solvers or derived maps; only
//! the raw tables and scalar arithmetic are shared.

#![allow(dead_code)]

use whopf::scalar::Scalar;
use whopf::wha::WeakHopfAlgebra;

pub type V = Vec<Scalar>;

pub struct Naive {
    pub n: usize,
    /// mult[i][j][k]: coefficient of e_k in e_i e_j.
    pub mult: Vec<Vec<V>>,
    /// comult[i][a][b]: coefficient of e_a⊗e_b in Δ(e_i).
    pub comult: Vec<Vec<V>>,
    pub unit: V,
    pub counit: V,
    /// s[c][r]: coefficient of e_r in S(e_c).
    pub s: Option<Vec<V>>,
}

fn zeros(n: usize) -> V {
    vec![Scalar::zero(); n]
}

impl Naive {
    pub fn new(h: &WeakHopfAlgebra) -> Self {
        let n = h.dim();
        let mut mult = vec![vec![zeros(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.mul_basis(i, j) {
                    mult[i][j][*k] = mult[i][j][*k].clone() + c.clone();
                }
            }
        }
        let mut comult = vec![vec![zeros(n); n]; n];
        for i in 0..n {
            for (ab, c) in h.comul_basis(i) {
                let (a, b) = (ab / n, ab % n);
                comult[i][a][b] = comult[i][a][b].clone() + c.clone();
            }
        }
        let s = h.antipode().ok().map(|m| {
            (0..n)
                .map(|c| (0..n).map(|r| m.get(r, c).clone()).collect())
                .collect()
        });
        Naive {
            n,
            mult,
            comult,
            unit: h.unit().clone(),
            counit: h.counit().clone(),
            s,
        }
    }

    pub fn e(&self, i: usize) -> V {
        let mut v = zeros(self.n);
        v[i] = Scalar::one();
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> V {
        let mut out = zeros(self.n);
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.n {
                    if !self.mult[i][j][k].is_zero() {
                        out[k] = out[k].clone() + &c * &self.mult[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..self.n {
            s = s + &x[i] * &self.counit[i];
        }
        s
    }

    /// Δ(x) as an n×n table.
    pub fn comul(&self, x: &[Scalar]) -> Vec<V> {
        let mut out = vec![zeros(self.n); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for a in 0..self.n {
                for b in 0..self.n {
                    if !self.comult[i][a][b].is_zero() {
                        out[a][b] = out[a][b].clone() + &x[i] * &self.comult[i][a][b];
                    }
                }
            }
        }
        out
    }

    pub fn s(&self, x: &[Scalar]) -> V {
        let s = self.s.as_ref().expect("antipode");
        let mut out = zeros(self.n);
        for c in 0..self.n {
            if x[c].is_zero() {
                continue;
            }
            for r in 0..self.n {
                out[r] = out[r].clone() + &x[c] * &s[c][r];
            }
        }
        out
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> V {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn scale(&self, c: &Scalar, x: &[Scalar]) -> V {
        x.iter().map(|a| c * a).collect()
    }

    /// Product of two elements of H⊗H given as tables.
    pub fn tmul(&self, x: &[V], y: &[V]) -> Vec<V> {
        let n = self.n;
        let mut out = vec![zeros(n); n];
        for a in 0..n {
            for b in 0..n {
                if x[a][b].is_zero() {
                    continue;
                }
                for c in 0..n {
                    for d in 0..n {
                        if y[c][d].is_zero() {
                            continue;
                        }
                        let coef = &x[a][b] * &y[c][d];
                        let l = &self.mult[a][c];
                        let r = &self.mult[b][d];
                        for p in 0..n {
                            if l[p].is_zero() {
                                continue;
                            }
                            for q in 0..n {
                                if !r[q].is_zero() {
                                    out[p][q] = out[p][q].clone() + &(&coef * &l[p]) * &r[q];
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// ε_t(x) = ε(1₁x)1₂.
    pub fn eps_t(&self, x: &[Scalar]) -> V {
        let d1 = self.comul(&self.unit);
        let mut out = zeros(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                if !d1[a][b].is_zero() {
                    let c = &d1[a][b] * &self.eps(&self.mul(&self.e(a), x));
                    out = self.add(&out, &self.scale(&c, &self.e(b)));
                }
            }
        }
        out
    }

    /// ε_s(x) = 1₁ε(x1₂).
    pub fn eps_s(&self, x: &[Scalar]) -> V {
        let d1 = self.comul(&self.unit);
        let mut out = zeros(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                if !d1[a][b].is_zero() {
                    let c = &d1[a][b] * &self.eps(&self.mul(x, &self.e(b)));
                    out = self.add(&out, &self.scale(&c, &self.e(a)));
                }
            }
        }
        out
    }

    /// Every weak Hopf axiom on every tuple of basis elements; returns the
    /// first failure.
    pub fn axioms(&self) -> Result<(), String> {
        let n = self.n;
        let one = &self.unit;
        // associativity, unit
        for i in 0..n {
            let ei = self.e(i);
            if self.mul(one, &ei) != ei || self.mul(&ei, one) != ei {
                return Err(format!("unit at {}", i));
            }
            for j in 0..n {
                let ij = self.mul(&ei, &self.e(j));
                for k in 0..n {
                    if self.mul(&ij, &self.e(k)) != self.mul(&ei, &self.mul(&self.e(j), &self.e(k))) {
                        return Err(format!("associativity at {:?}", (i, j, k)));
                    }
                }
            }
        }
        // coassociativity, counit
        for i in 0..n {
            let d = &self.comult[i];
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let mut l = Scalar::zero();
                        let mut r = Scalar::zero();
                        for m in 0..n {
                            l = l + &d[m][c] * &self.comult[m][a][b];
                            r = r + &d[a][m] * &self.comult[m][b][c];
                        }
                        if l != r {
                            return Err(format!("coassociativity at {}", i));
                        }
                    }
                }
            }
            let mut left = zeros(n);
            let mut right = zeros(n);
            for a in 0..n {
                for b in 0..n {
                    left[b] = left[b].clone() + &self.counit[a] * &d[a][b];
                    right[a] = right[a].clone() + &d[a][b] * &self.counit[b];
                }
            }
            if left != self.e(i) || right != self.e(i) {
                return Err(format!("counit at {}", i));
            }
        }
        // Δ multiplicative
        for i in 0..n {
            for j in 0..n {
                let lhs = self.comul(&self.mul(&self.e(i), &self.e(j)));
                if lhs != self.tmul(&self.comult[i], &self.comult[j]) {
                    return Err(format!("Δ multiplicative at {:?}", (i, j)));
                }
            }
        }
        // weak counit: ε(xyz) = ε(xy₁)ε(y₂z) = ε(xy₂)ε(y₁z)
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(&self.e(x), &self.e(y));
                let xy_eps: V = (0..n).map(|z| self.eps(&self.mul(&xy, &self.e(z)))).collect();
                let mut m1 = zeros(n);
                let mut m2 = zeros(n);
                for a in 0..n {
                    for b in 0..n {
                        let c = &self.comult[y][a][b];
                        if c.is_zero() {
                            continue;
                        }
                        let xa = self.eps(&self.mul(&self.e(x), &self.e(a)));
                        let xb = self.eps(&self.mul(&self.e(x), &self.e(b)));
                        for z in 0..n {
                            let bz = self.eps(&self.mul(&self.e(b), &self.e(z)));
                            let az = self.eps(&self.mul(&self.e(a), &self.e(z)));
                            m1[z] = m1[z].clone() + &(c * &xa) * &bz;
                            m2[z] = m2[z].clone() + &(c * &xb) * &az;
                        }
                    }
                }
                if xy_eps != m1 || xy_eps != m2 {
                    return Err(format!("weak counit at {:?}", (x, y)));
                }
            }
        }
        // weak unit: Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)
        let d1 = self.comul(one);
        let mut dd = vec![vec![zeros(n); n]; n];
        for m in 0..n {
            for c in 0..n {
                if d1[m][c].is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        dd[a][b][c] = dd[a][b][c].clone() + &d1[m][c] * &self.comult[m][a][b];
                    }
                }
            }
        }
        let triple = |x: &[V], y: &[V], left_first: bool| -> Vec<Vec<V>> {
            // (x⊗1)(1⊗y) or (1⊗y)(x⊗1)
            let mut out = vec![vec![zeros(n); n]; n];
            for a in 0..n {
                for b in 0..n {
                    if x[a][b].is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        for d in 0..n {
                            if y[c][d].is_zero() {
                                continue;
                            }
                            let coef = &x[a][b] * &y[c][d];
                            let mid = if left_first {
                                &self.mult[b][c]
                            } else {
                                &self.mult[c][b]
                            };
                            for m in 0..n {
                                if !mid[m].is_zero() {
                                    out[a][m][d] = out[a][m][d].clone() + &coef * &mid[m];
                                }
                            }
                        }
                    }
                }
            }
            out
        };
        if dd != triple(&d1, &d1, true) || dd != triple(&d1, &d1, false) {
            return Err("weak unit".into());
        }
        // antipode
        let Some(_) = &self.s else {
            return Err("no antipode".into());
        };
        for i in 0..n {
            let d = &self.comult[i];
            let mut l = zeros(n);
            let mut r = zeros(n);
            let mut sandwich = zeros(n);
            for a in 0..n {
                for b in 0..n {
                    if d[a][b].is_zero() {
                        continue;
                    }
                    l = self.add(&l, &self.scale(&d[a][b], &self.mul(&self.e(a), &self.s(&self.e(b)))));
                    r = self.add(&r, &self.scale(&d[a][b], &self.mul(&self.s(&self.e(a)), &self.e(b))));
                    // S(x₁)x₂S(x₃) with Δ(x₂) expanded from b
                    for p in 0..n {
                        for q in 0..n {
                            let c = &self.comult[b][p][q];
                            if c.is_zero() {
                                continue;
                            }
                            let t = self.mul(&self.mul(&self.s(&self.e(a)), &self.e(p)), &self.s(&self.e(q)));
                            sandwich = self.add(&sandwich, &self.scale(&(&d[a][b] * c), &t));
                        }
                    }
                }
            }
            if l != self.eps_t(&self.e(i)) {
                return Err(format!("x₁S(x₂) = ε_t(x) at {}", i));
            }
            if r != self.eps_s(&self.e(i)) {
                return Err(format!("S(x₁)x₂ = ε_s(x) at {}", i));
            }
            if sandwich != self.s(&self.e(i)) {
                return Err(format!("S(x₁)x₂S(x₃) = S(x) at {}", i));
            }
        }
        Ok(())
    }

    /// Σ_i (S²)_{ii}.
    pub fn trace_s2(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.n {
            t = t + self.s(&self.s(&self.e(i)))[i].clone();
        }
        t
    }

    /// Tr(L_x) for left multiplication by x.
    pub fn regular_trace(&self, x: &[Scalar]) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.n {
            t = t + self.mul(x, &self.e(i))[i].clone();
        }
        t
    }

    /// Rank of the trace form (e_i, e_j) ↦ Tr(L_{e_i e_j}), by plain
    /// Gaussian elimination.
    pub fn trace_form_rank(&self) -> usize {
        let mut m: Vec<V> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.regular_trace(&self.mul(&self.e(i), &self.e(j))))
                    .collect()
            })
            .collect();
        rank(&mut m)
    }

    /// Δ(g) = (g⊗g)Δ(1) = Δ(1)(g⊗g).
    pub fn is_grouplike(&self, g: &[Scalar]) -> bool {
        let n = self.n;
        let mut gg = vec![zeros(n); n];
        for a in 0..n {
            for b in 0..n {
                gg[a][b] = &g[a] * &g[b];
            }
        }
        let d1 = self.comul(&self.unit);
        let dg = self.comul(g);
        dg == self.tmul(&gg, &d1) && dg == self.tmul(&d1, &gg)
    }
}

pub fn rank(m: &mut [V]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for k in 0..cols {
                    let sub = &f * &m[r][k];
                    m[i][k] = &m[i][k] - &sub;
                }
            }
        }
        r += 1;
    }
    r
}

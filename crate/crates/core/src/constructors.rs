//! Builders for concrete weak Hopf algebras.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::wha::{canonical_sparse, Acc, WeakHopfAlgebra};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// `table[a*n + b]` is the index of `ab`.
    table: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let bad = |m: &str| Err(Error::InvalidPresentation(m.to_string()));
        if n == 0 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            return bad("group table must be n×n with entries in range");
        }
        let g = FiniteGroup { labels, table };
        let Some(e) = (0..n).find(|&e| (0..n).all(|a| g.mul(e, a) == a && g.mul(a, e) == a))
        else {
            return bad("no identity element");
        };
        for a in 0..n {
            if !(0..n).any(|b| g.mul(a, b) == e && g.mul(b, a) == e) {
                return bad(&format!("{} has no inverse", g.labels[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return bad("table is not associative");
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            labels: vec!["1".into()],
            table: vec![0],
        }
    }

    /// ℤ/n with elements e, g, g^2, ….
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                k => format!("g^{}", k),
            })
            .collect();
        let table = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
        FiniteGroup { labels, table }
    }

    /// The symmetric group on n letters, elements in lexicographic one-line notation.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n));
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(|x| !p.contains(x))
                        .map(|x| {
                            let mut q = p.clone();
                            q.push(x);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>())
            .collect();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let m = perms.len();
        // (ab)(x) = a(b(x))
        let table = (0..m * m)
            .map(|ab| {
                let (a, b) = (&perms[ab / m], &perms[ab % m]);
                index(&(0..n).map(|x| a[b[x]]).collect())
            })
            .collect();
        FiniteGroup { labels, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn identity(&self) -> usize {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|a| self.mul(e, a) == a)).unwrap()
    }

    pub fn inverse(&self, a: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&b| self.mul(a, b) == e).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }
}

/// A finite groupoid: objects, morphisms with source and target, and composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    objects: usize,
    labels: Vec<String>,
    source: Vec<usize>,
    target: Vec<usize>,
    /// `compose[f*m + g]` is `f∘g` (first g, then f) when `source(f) == target(g)`.
    compose: Vec<Option<usize>>,
}

impl Groupoid {
    /// Validates and assembles a groupoid; `compose(f, g)` is queried only for
    /// composable pairs.
    pub fn new(
        objects: usize,
        labels: Vec<String>,
        source: Vec<usize>,
        target: Vec<usize>,
        compose: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let m = labels.len();
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        if source.len() != m || target.len() != m {
            return bad("source/target maps must cover every morphism".into());
        }
        if source.iter().chain(target.iter()).any(|&x| x >= objects) {
            return bad("object index out of range".into());
        }
        let mut table = vec![None; m * m];
        for f in 0..m {
            for g in 0..m {
                if source[f] != target[g] {
                    continue;
                }
                match compose(f, g) {
                    Some(h) if h < m && source[h] == source[g] && target[h] == target[f] => {
                        table[f * m + g] = Some(h)
                    }
                    _ => {
                        return bad(format!(
                            "composition {}∘{} missing or ill-typed",
                            labels[f], labels[g]
                        ))
                    }
                }
            }
        }
        let gpd = Groupoid {
            objects,
            labels,
            source,
            target,
            compose: table,
        };
        for x in 0..objects {
            if gpd.try_identity(x).is_none() {
                return bad(format!("object {} has no identity", x));
            }
        }
        for f in 0..m {
            if gpd.try_inverse(f).is_none() {
                return bad(format!("{} is not invertible", gpd.labels[f]));
            }
            for g in 0..m {
                for h in 0..m {
                    let left = gpd.compose(f, g).and_then(|fg| gpd.compose(fg, h));
                    let right = gpd.compose(g, h).and_then(|gh| gpd.compose(f, gh));
                    if left != right {
                        return bad("composition is not associative".into());
                    }
                }
            }
        }
        Ok(gpd)
    }

    /// The pair groupoid on n objects: one morphism m_xy: y → x for every pair.
    pub fn pair(n: usize) -> Self {
        let labels = (0..n * n)
            .map(|xy| format!("m{}{}", xy / n + 1, xy % n + 1))
            .collect();
        let source = (0..n * n).map(|xy| xy % n).collect();
        let target = (0..n * n).map(|xy| xy / n).collect();
        Groupoid::new(n, labels, source, target, |f, g| {
            Some((f / n) * n + g % n)
        })
        .expect("pair groupoid is valid")
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        let m = g.order();
        Groupoid::new(1, g.labels().to_vec(), vec![0; m], vec![0; m], |a, b| {
            Some(g.mul(a, b))
        })
        .expect("groups are one-object groupoids")
    }

    /// Disjoint union; morphism labels get suffixes `_1` and `_2`.
    pub fn disjoint_union(a: &Groupoid, b: &Groupoid) -> Self {
        let (ma, mb) = (a.morphisms(), b.morphisms());
        let labels = a
            .labels
            .iter()
            .map(|l| format!("{}_1", l))
            .chain(b.labels.iter().map(|l| format!("{}_2", l)))
            .collect();
        let source = a
            .source
            .iter()
            .copied()
            .chain(b.source.iter().map(|x| x + a.objects))
            .collect();
        let target = a
            .target
            .iter()
            .copied()
            .chain(b.target.iter().map(|x| x + a.objects))
            .collect();
        Groupoid::new(a.objects + b.objects, labels, source, target, |f, g| {
            match (f < ma, g < ma) {
                (true, true) => a.compose(f, g),
                (false, false) => b.compose(f - ma, g - ma).map(|h| h + ma),
                _ => None,
            }
        })
        .map(|g| {
            debug_assert_eq!(g.morphisms(), ma + mb);
            g
        })
        .expect("disjoint union of groupoids is a groupoid")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn source(&self, f: usize) -> usize {
        self.source[f]
    }

    pub fn target(&self, f: usize) -> usize {
        self.target[f]
    }

    /// f∘g when defined.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose[f * self.morphisms() + g]
    }

    fn try_identity(&self, x: usize) -> Option<usize> {
        let m = self.morphisms();
        (0..m).find(|&e| {
            self.source[e] == x
                && self.target[e] == x
                && (0..m).all(|f| {
                    (self.target[f] != x || self.compose(e, f) == Some(f))
                        && (self.source[f] != x || self.compose(f, e) == Some(f))
                })
        })
    }

    fn try_inverse(&self, f: usize) -> Option<usize> {
        let (s, t) = (self.source[f], self.target[f]);
        let (es, et) = (self.try_identity(s)?, self.try_identity(t)?);
        (0..self.morphisms()).find(|&g| {
            self.compose(g, f) == Some(es) && self.compose(f, g) == Some(et)
        })
    }

    pub fn identity(&self, x: usize) -> usize {
        self.try_identity(x).expect("validated groupoid")
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.try_inverse(f).expect("validated groupoid")
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity(self.source[f]) == f
    }
}

fn one() -> Scalar {
    Scalar::one()
}

fn permutation_matrix(n: usize, image: impl Fn(usize) -> usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        m.set(image(k), k, one());
    }
    m
}

/// The groupoid algebra: product is composition (or zero), every morphism is
/// group-like, ε ≡ 1 on morphisms and S(g) = g⁻¹.
pub fn groupoid_algebra(g: &Groupoid, field: FieldSpec) -> WeakHopfAlgebra {
    let m = g.morphisms();
    let mut unit = zero_vector(m);
    for x in 0..g.objects() {
        unit[g.identity(x)] = one();
    }
    WeakHopfAlgebra::from_fns(
        field,
        g.labels().to_vec(),
        |a, b| g.compose(a, b).map(|c| vec![(c, one())]).unwrap_or_default(),
        unit,
        |a| vec![(a * m + a, one())],
        vec![one(); m],
        Some(permutation_matrix(m, |k| g.inverse(k))),
    )
    .expect("groupoid algebra tables are well formed")
}

/// The algebra of functions on a groupoid, in the basis of point masses p_g
/// (labelled `g*`).
pub fn function_algebra(g: &Groupoid, field: FieldSpec) -> WeakHopfAlgebra {
    let m = g.morphisms();
    let labels = g.labels().iter().map(|l| format!("{}*", l)).collect();
    let counit = (0..m)
        .map(|f| if g.is_identity(f) { one() } else { Scalar::zero() })
        .collect();
    WeakHopfAlgebra::from_fns(
        field,
        labels,
        |a, b| if a == b { vec![(a, one())] } else { vec![] },
        vec![one(); m],
        |c| {
            let mut out = Vec::new();
            for u in 0..m {
                for v in 0..m {
                    if g.compose(u, v) == Some(c) {
                        out.push((u * m + v, one()));
                    }
                }
            }
            out
        },
        counit,
        Some(permutation_matrix(m, |k| g.inverse(k))),
    )
    .expect("function algebra tables are well formed")
}

pub fn group_algebra(g: &FiniteGroup, field: FieldSpec) -> WeakHopfAlgebra {
    groupoid_algebra(&Groupoid::from_group(g), field)
}

/// M_n with matrix units E_{xy} = m_xy as group-like elements.
pub fn matrix_wha(n: usize) -> WeakHopfAlgebra {
    groupoid_algebra(&Groupoid::pair(n), FieldSpec::Rational)
}

/// The four-dimensional non-semisimple Hopf algebra with basis 1, g, x, gx,
/// g² = 1, x² = 0, xg = −gx, Δ(x) = x⊗1 + g⊗x.
pub fn sweedler() -> WeakHopfAlgebra {
    let s = Scalar::int;
    let labels = ["1", "g", "x", "gx"].iter().map(|l| l.to_string()).collect();
    #[rustfmt::skip]
    let table: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    let antipode = Matrix::from_i64(4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
    WeakHopfAlgebra::from_fns(
        FieldSpec::Rational,
        labels,
        |a, b| {
            let (k, c) = table[a][b];
            if c == 0 {
                vec![]
            } else {
                vec![(k, s(c))]
            }
        },
        vec![s(1), s(0), s(0), s(0)],
        |a| match a {
            0 => vec![(0, s(1))],
            1 => vec![(4 + 1, s(1))],
            2 => vec![(2 * 4, s(1)), (4 + 2, s(1))],
            _ => vec![(3 * 4 + 1, s(1)), (3, s(1))],
        },
        vec![s(1), s(1), s(0), s(0)],
        Some(antipode),
    )
    .expect("well formed")
}

/// The monoid bialgebra on {1, z} with z² = z and both elements group-like.
/// It satisfies every bialgebra axiom but has no antipode, and its only
/// integrals are degenerate.
pub fn idempotent_monoid_bialgebra() -> WeakHopfAlgebra {
    WeakHopfAlgebra::from_fns(
        FieldSpec::Rational,
        vec!["1".into(), "z".into()],
        |a, b| vec![(a.max(b), one())],
        vec![one(), Scalar::zero()],
        |a| vec![(a * 2 + a, one())],
        vec![one(), one()],
        None,
    )
    .expect("well formed")
}

/// A split semisimple algebra B = ⊕ M_{n_i}, a central subalgebra A ⊆ Z(B),
/// and an invertible g ∈ B.
#[derive(Clone, Debug, PartialEq)]
pub struct SemisimplePresentation {
    pub blocks: Vec<usize>,
    /// Generators of A, each given by its scalar on every block (A always contains 1).
    pub central_generators: Vec<Vec<Scalar>>,
    /// g, one matrix per block.
    pub g: Vec<Matrix>,
}

impl SemisimplePresentation {
    /// A = k1 and g = 1.
    pub fn trivial(blocks: Vec<usize>) -> Self {
        let g = blocks.iter().map(|&n| Matrix::identity(n)).collect();
        SemisimplePresentation {
            blocks,
            central_generators: vec![],
            g,
        }
    }

    pub fn with_g(mut self, g: Vec<Matrix>) -> Self {
        self.g = g;
        self
    }

    pub fn dim_b(&self) -> usize {
        self.blocks.iter().map(|n| n * n).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut acc = 0;
        for n in &self.blocks {
            out.push(acc);
            acc += n * n;
        }
        out
    }

    /// (block, row, column) of each matrix unit in the basis of B.
    fn units(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, &n) in self.blocks.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    out.push((i, a, b));
                }
            }
        }
        out
    }

    pub fn b_labels(&self) -> Vec<String> {
        let multi = self.blocks.len() > 1;
        self.units()
            .into_iter()
            .map(|(i, a, b)| {
                if multi {
                    format!("B{}E{}{}", i + 1, a + 1, b + 1)
                } else {
                    format!("E{}{}", a + 1, b + 1)
                }
            })
            .collect()
    }

    pub(crate) fn b_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let units = self.units();
        let offsets = self.offsets();
        let mut out = zero_vector(self.dim_b());
        for (p, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            let (i, a, b) = units[p];
            let n = self.blocks[i];
            for c in 0..n {
                let q = offsets[i] + b * n + c;
                if !y[q].is_zero() {
                    out[offsets[i] + a * n + c] += &(cx * &y[q]);
                }
            }
        }
        out
    }

    /// Block matrices packed into a B-vector.
    pub fn pack(&self, mats: &[Matrix]) -> Vector {
        let mut out = Vec::with_capacity(self.dim_b());
        for (m, &n) in mats.iter().zip(&self.blocks) {
            for a in 0..n {
                for b in 0..n {
                    out.push(m.get(a, b).clone());
                }
            }
        }
        out
    }

    pub fn unit_b(&self) -> Vector {
        let id: Vec<Matrix> = self.blocks.iter().map(|&n| Matrix::identity(n)).collect();
        self.pack(&id)
    }

    /// Tr_reg on B: n_i·tr on the block M_{n_i}.
    pub(crate) fn regular_trace(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (p, (i, a, b)) in self.units().into_iter().enumerate() {
            if a == b && !x[p].is_zero() {
                acc += &(&Scalar::int(self.blocks[i] as i64) * &x[p]);
            }
        }
        acc
    }

    pub fn check(&self) -> Result<()> {
        if self.blocks.is_empty() || self.blocks.contains(&0) {
            return Err(Error::InvalidPresentation("blocks must be positive".into()));
        }
        if self.g.len() != self.blocks.len()
            || self.g.iter().zip(&self.blocks).any(|(m, &n)| m.rows() != n || m.cols() != n)
        {
            return Err(Error::InvalidPresentation("g must have one n_i × n_i block per block".into()));
        }
        if self.central_generators.iter().any(|v| v.len() != self.blocks.len()) {
            return Err(Error::InvalidPresentation("central generators need one scalar per block".into()));
        }
        for (i, (m, &n)) in self.g.iter().zip(&self.blocks).enumerate() {
            if m.invert().is_err() {
                return Err(Error::InvalidPresentation(format!("block {} of g is singular", i + 1)));
            }
            let tr = m.trace();
            if tr != Scalar::int(n as i64) {
                return Err(Error::TraceConditionViolated(format!(
                    "block {}: tr(g) = {}, expected {}",
                    i + 1,
                    tr,
                    n
                )));
            }
        }
        Ok(())
    }

    fn g_inverse(&self) -> Vec<Matrix> {
        self.g.iter().map(|m| m.invert().expect("checked")).collect()
    }
}

/// The unique two-sided separability element of B, as (p, q, coefficient)
/// over matrix-unit indices: Σ_i (1/n_i) Σ_{ab} E^i_{ab} ⊗ E^i_{ba}.
pub fn separability_element(p: &SemisimplePresentation) -> Vec<(usize, usize, Scalar)> {
    let offsets = p.offsets();
    let mut out = Vec::new();
    for (i, &n) in p.blocks.iter().enumerate() {
        let w = Scalar::ratio(1, n as i64);
        for a in 0..n {
            for b in 0..n {
                out.push((offsets[i] + a * n + b, offsets[i] + b * n + a, w.clone()));
            }
        }
    }
    out
}

/// The minimal weak Hopf algebra B ⊗_A B^op together with the data needed
/// to embed elements of B into it.
#[derive(Clone, Debug)]
pub struct MinimalWha {
    pub algebra: WeakHopfAlgebra,
    pub presentation: SemisimplePresentation,
    /// Projection from B ⊗ B^op onto the chosen quotient basis.
    projection: Matrix,
}

impl MinimalWha {
    /// The class of b ⊗ c̄.
    pub fn embed(&self, b: &[Scalar], c: &[Scalar]) -> Vector {
        let db = self.presentation.dim_b();
        let mut amb = zero_vector(db * db);
        for (p, x) in b.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in c.iter().enumerate() {
                if !y.is_zero() {
                    amb[p * db + q] = x * y;
                }
            }
        }
        self.projection.apply(&amb)
    }

    /// The class of b ⊗ 1̄, i.e. b viewed in the target base.
    pub fn embed_left(&self, b: &[Scalar]) -> Vector {
        self.embed(b, &self.presentation.unit_b())
    }
}

/// Builds B ⊗_A B^op with
/// Δ(b c̄) = b(g e⁽¹⁾)‾ ⊗ e⁽²⁾c̄, ε(b c̄) = Tr_reg(g⁻¹cb), S(b c̄) = g⁻¹cg b̄.
pub fn minimal_wha(p: &SemisimplePresentation) -> Result<MinimalWha> {
    p.check()?;
    let db = p.dim_b();
    let big = db * db;
    let basis_b = |k: usize| crate::linalg::unit_vector(db, k);
    let g = p.pack(&p.g);
    let g_inv = p.pack(&p.g_inverse());
    let sep = separability_element(p);

    // relations ab ⊗ c̄ − b ⊗ (ca)‾ for a among the central generators
    let central: Vec<Vector> = p
        .central_generators
        .iter()
        .map(|vals| {
            let mats: Vec<Matrix> = vals
                .iter()
                .zip(&p.blocks)
                .map(|(v, &n)| Matrix::identity(n).scale(v))
                .collect();
            p.pack(&mats)
        })
        .collect();
    let mut relations = Vec::new();
    for a in &central {
        for x in 0..db {
            let ab = p.b_mul(a, &basis_b(x));
            for y in 0..db {
                let ca = p.b_mul(&basis_b(y), a);
                let mut r = zero_vector(big);
                for (k, v) in ab.iter().enumerate() {
                    if !v.is_zero() {
                        r[k * db + y] += v;
                    }
                }
                for (k, v) in ca.iter().enumerate() {
                    if !v.is_zero() {
                        r[x * db + k] -= v;
                    }
                }
                relations.push(r);
            }
        }
    }
    let rel = Subspace::from_vectors(big, relations);

    // quotient basis: first standard vectors independent modulo the relations
    let mut chosen = Vec::new();
    let mut span = rel.clone();
    for k in 0..big {
        let e = crate::linalg::unit_vector(big, k);
        if !span.contains(&e) {
            span = span.sum(&Subspace::from_vectors(big, vec![e]));
            chosen.push(k);
        }
    }
    let q = chosen.len();
    let mut cols: Vec<Vector> = chosen
        .iter()
        .map(|&k| crate::linalg::unit_vector(big, k))
        .collect();
    cols.extend(rel.basis().iter().cloned());
    let full = Matrix::from_columns(big, &cols).invert()?;
    let projection = Matrix::from_fn(q, big, |r, c| full.get(r, c).clone());
    let project = |v: &[Scalar]| projection.apply(v);
    let project_sparse = |entries: &[(usize, Scalar)]| -> Vec<(usize, Scalar)> {
        let mut acc = Acc::new();
        for (k, c) in entries {
            for r in 0..q {
                let w = projection.get(r, *k);
                if !w.is_zero() {
                    acc.add(r, c * w);
                }
            }
        }
        acc.into_sparse()
    };

    let b_labels = p.b_labels();
    let labels: Vec<String> = chosen
        .iter()
        .map(|&k| format!("{}⊗{}°", b_labels[k / db], b_labels[k % db]))
        .collect();

    // structure on representatives (x, y) ↦ b_x ⊗ c̄_y
    let mul = |s: usize, t: usize| {
        let (x1, y1) = (chosen[s] / db, chosen[s] % db);
        let (x2, y2) = (chosen[t] / db, chosen[t] % db);
        let left = p.b_mul(&basis_b(x1), &basis_b(x2));
        let right = p.b_mul(&basis_b(y2), &basis_b(y1));
        let mut entries = Vec::new();
        for (k, a) in left.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in right.iter().enumerate() {
                if !b.is_zero() {
                    entries.push((k * db + l, a * b));
                }
            }
        }
        project_sparse(&canonical_sparse(entries))
    };

    let comul = |s: usize| {
        let (x, y) = (chosen[s] / db, chosen[s] % db);
        let mut acc = Acc::new();
        for (e1, e2, w) in &sep {
            let ge1 = p.b_mul(&g, &basis_b(*e1));
            // left leg b_x ⊗ (g e1)‾, right leg e2 ⊗ c̄_y
            let left: Vec<(usize, Scalar)> = ge1
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(r, v)| (x * db + r, v.clone()))
                .collect();
            let left = project_sparse(&left);
            let right = project_sparse(&[(e2 * db + y, Scalar::one())]);
            for (i, a) in &left {
                for (j, b) in &right {
                    acc.add(i * q + j, &(w * a) * b);
                }
            }
        }
        acc.into_sparse()
    };

    let counit: Vector = chosen
        .iter()
        .map(|&k| {
            let (x, y) = (k / db, k % db);
            let cb = p.b_mul(&basis_b(y), &basis_b(x));
            p.regular_trace(&p.b_mul(&g_inv, &cb))
        })
        .collect();

    let antipode_cols: Vec<Vector> = chosen
        .iter()
        .map(|&k| {
            let (x, y) = (k / db, k % db);
            let conj = p.b_mul(&p.b_mul(&g_inv, &basis_b(y)), &g);
            let mut amb = zero_vector(big);
            for (r, v) in conj.iter().enumerate() {
                if !v.is_zero() {
                    amb[r * db + x] = v.clone();
                }
            }
            project(&amb)
        })
        .collect();

    let unit_b = p.unit_b();
    let mut unit_amb = zero_vector(big);
    for (r, a) in unit_b.iter().enumerate() {
        for (s, b) in unit_b.iter().enumerate() {
            if !a.is_zero() && !b.is_zero() {
                unit_amb[r * db + s] = a * b;
            }
        }
    }

    let algebra = WeakHopfAlgebra::from_fns(
        FieldSpec::Rational,
        labels,
        mul,
        project(&unit_amb),
        comul,
        counit,
        Some(Matrix::from_columns(q, &antipode_cols)),
    )?;
    Ok(MinimalWha {
        algebra,
        presentation: p.clone(),
        projection,
    })
}

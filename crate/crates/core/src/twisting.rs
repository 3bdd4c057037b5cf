//! Deformations: the base deformation by an invertible q ∈ H_t, the
//! regularization it affords, twists (Θ, Θ̄) and twists induced by dynamical
//! twists over a Hopf algebra.

use serde::Serialize;

use crate::constructors::matrix_wha;
use crate::error::{Error, Result};
use crate::grouplikes::is_grouplike;
use crate::integrals::is_semisimple;
use crate::linalg::{add_vectors, scale_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;
use crate::semisimplicity::{connectedness, element_label, primitive_idempotents};
use crate::validate::validate;
use crate::wha::{dense_from_sparse, sparse_from_dense, Element, Sparse, WeakHopfAlgebra};

fn require_valid(h: WeakHopfAlgebra, what: &str) -> Result<WeakHopfAlgebra> {
    let failed = validate(&h).failures().next().map(|f| f.axiom);
    match failed {
        None => Ok(h),
        Some(axiom) => Err(Error::AxiomFailure(format!("{} fails {}", what, axiom))),
    }
}

fn residual(lhs: &[Scalar], rhs: &[Scalar]) -> String {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(k, (a, b))| format!("component {} off by {}", k, a - b))
        .unwrap_or_default()
}

// ---- base deformation -----------------------------------------------------

/// S(1₍₁₎)q1₍₂₎.
fn sandwich_unit(h: &WeakHopfAlgebra, q: &[Scalar]) -> Result<Element> {
    let n = h.dim();
    let s = h.antipode()?;
    let mut out = h.zero();
    for (ab, c) in h.delta_one().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = h.mul3(&s.column(ab / n), q, &h.basis_element(ab % n));
        crate::linalg::axpy(&mut out, c, &t);
    }
    Ok(out)
}

/// H_q: Δ'(h) = Δ(h)(1⊗q), ε'(h) = ε(hq⁻¹), S'(h) = q⁻¹S(h)q.
pub fn deform_q(h: &WeakHopfAlgebra, q: &[Scalar]) -> Result<WeakHopfAlgebra> {
    let unmet = |m: String| Err(Error::PreconditionUnmet(m));
    if !h.target_base().contains(q) {
        return unmet("q is not in H_t".into());
    }
    let q_inv = match h.invert_element(q) {
        Ok(x) => x,
        Err(_) => return unmet("q is not invertible".into()),
    };
    let s = h.antipode()?;
    let s2q = s.apply(&s.apply(q));
    if s2q != q {
        return unmet(format!("S²(q) ≠ q: {}", residual(&s2q, q)));
    }
    let w = sandwich_unit(h, q)?;
    if w != *h.unit() {
        return unmet(format!("S(1₍₁₎)q1₍₂₎ ≠ 1: {}", residual(&w, h.unit())));
    }
    let n = h.dim();
    let one_q = sparse_from_dense(&h.tensor(h.unit(), q));
    let comult: Vec<Sparse> = (0..n)
        .map(|i| h.tensor_mul_sparse(2, h.comul_basis(i), &one_q))
        .collect();
    let counit: Vector = (0..n)
        .map(|i| h.eps(&h.mul(&h.basis_element(i), &q_inv)))
        .collect();
    let lq = h.left_mult_matrix(&q_inv);
    let rq = h.right_mult_matrix(q);
    let antipode = lq.mul(&rq.mul(s));
    let out = WeakHopfAlgebra::new(
        h.field(),
        h.labels().to_vec(),
        h.mult_table().to_vec(),
        h.unit().clone(),
        comult,
        counit,
        Some(antipode),
    )?;
    require_valid(out, "H_q")
}

#[derive(Clone, Debug)]
pub struct Regularized {
    pub algebra: WeakHopfAlgebra,
    pub q: Element,
}

/// Deforms H by q = g⁻¹ from the minimal data so that S² fixes H_min.
pub fn regularize(h: &WeakHopfAlgebra) -> Result<Regularized> {
    if h.is_regular()? {
        return Ok(Regularized {
            algebra: h.clone(),
            q: h.unit().clone(),
        });
    }
    let q = h.minimal_data()?.g_inv;
    let algebra = deform_q(h, &q)?;
    if !algebra.is_regular()? {
        return Err(Error::Mismatch(
            "deformation by g⁻¹ did not make S² trivial on H_min".into(),
        ));
    }
    Ok(Regularized { algebra, q })
}

// ---- twists ---------------------------------------------------------------

/// A pair of tensors in H⊗H deforming the coproduct to Θ̄Δ(h)Θ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Twist {
    pub theta: Element,
    pub theta_bar: Element,
}

impl Twist {
    /// (Δ(1), Δ(1)).
    pub fn trivial(h: &WeakHopfAlgebra) -> Self {
        let d = h.delta_one();
        Twist {
            theta: d.clone(),
            theta_bar: d,
        }
    }
}

fn twisted_comult(h: &WeakHopfAlgebra, t: &Twist) -> Vec<Sparse> {
    let theta = sparse_from_dense(&t.theta);
    let bar = sparse_from_dense(&t.theta_bar);
    (0..h.dim())
        .map(|i| {
            let left = h.tensor_mul_sparse(2, &bar, h.comul_basis(i));
            h.tensor_mul_sparse(2, &left, &theta)
        })
        .collect()
}

/// Checks the leg conditions, ΘΘ̄ = Δ(1) and coassociativity of Θ̄ΔΘ.
pub fn check_twist(h: &WeakHopfAlgebra, t: &Twist) -> Result<()> {
    let nn = h.dim() * h.dim();
    if t.theta.len() != nn || t.theta_bar.len() != nn {
        return Err(Error::DimensionMismatch("twist tensors must lie in H⊗H".into()));
    }
    let d1 = h.delta_one();
    let not = |m: String| Err(Error::NotATwist(m));
    let left = h.tensor_mul(&d1, &t.theta);
    if left != t.theta {
        return not(format!("Θ ∉ Δ(1)(H⊗H): {}", residual(&left, &t.theta)));
    }
    let right = h.tensor_mul(&t.theta_bar, &d1);
    if right != t.theta_bar {
        return not(format!("Θ̄ ∉ (H⊗H)Δ(1): {}", residual(&right, &t.theta_bar)));
    }
    let prod = h.tensor_mul(&t.theta, &t.theta_bar);
    if prod != d1 {
        return not(format!("ΘΘ̄ ≠ Δ(1): {}", residual(&prod, &d1)));
    }
    let comult = twisted_comult(h, t);
    let probe = WeakHopfAlgebra::new(
        h.field(),
        h.labels().to_vec(),
        h.mult_table().to_vec(),
        h.unit().clone(),
        comult,
        h.counit().clone(),
        None,
    )?;
    for i in 0..h.dim() {
        let e = probe.basis_element(i);
        if probe.comul2(&e) != probe.comul2_right(&e) {
            return not(format!("Θ̄ΔΘ is not coassociative at {}", h.labels()[i]));
        }
    }
    Ok(())
}

/// H_Θ together with v = S(Θ⁽¹⁾)Θ⁽²⁾ and its inverse.
#[derive(Clone, Debug)]
pub struct Twisted {
    pub algebra: WeakHopfAlgebra,
    pub v: Element,
    pub v_inv: Element,
}

/// The twisted weak Hopf algebra H_Θ, fully validated.
pub fn twist(h: &WeakHopfAlgebra, t: &Twist) -> Result<WeakHopfAlgebra> {
    twist_full(h, t).map(|x| x.algebra)
}

pub fn twist_full(h: &WeakHopfAlgebra, t: &Twist) -> Result<Twisted> {
    check_twist(h, t)?;
    let n = h.dim();
    let s = h.antipode()?;
    let id = Matrix::identity(n);
    let v = h.multiply_legs(&h.tensor_map(s, &id, &t.theta));
    let v_inv = h.invert_element(&v).map_err(|_| Error::VNotInvertible)?;
    let v_inv_formula = h.multiply_legs(&h.tensor_map(&id, s, &t.theta_bar));
    if v_inv_formula != v_inv {
        return Err(Error::Mismatch(format!(
            "Θ̄⁽¹⁾S(Θ̄⁽²⁾) ≠ v⁻¹: {}",
            residual(&v_inv_formula, &v_inv)
        )));
    }
    let antipode = h.left_mult_matrix(&v_inv).mul(&h.right_mult_matrix(&v).mul(s));
    let out = WeakHopfAlgebra::new(
        h.field(),
        h.labels().to_vec(),
        h.mult_table().to_vec(),
        h.unit().clone(),
        twisted_comult(h, t),
        h.counit().clone(),
        Some(antipode),
    )?;
    let out = require_valid(out, "H_Θ")?;

    // counital maps against ε(Θ⁽¹⁾h)Θ⁽²⁾ and Θ̄⁽¹⁾ε(hΘ̄⁽²⁾)
    let e = h.counit_products();
    let mut et = Matrix::zeros(n, n);
    let mut es = Matrix::zeros(n, n);
    for i in 0..n {
        let mut col_t = zero_vector(n);
        let mut col_s = zero_vector(n);
        for ab in 0..n * n {
            let (a, b) = (ab / n, ab % n);
            if !t.theta[ab].is_zero() {
                col_t[b] += &(&t.theta[ab] * e.get(a, i));
            }
            if !t.theta_bar[ab].is_zero() {
                col_s[a] += &(&t.theta_bar[ab] * e.get(i, b));
            }
        }
        for r in 0..n {
            et.set(r, i, col_t[r].clone());
            es.set(r, i, col_s[r].clone());
        }
    }
    if *out.eps_t_matrix() != et || *out.eps_s_matrix() != es {
        return Err(Error::Mismatch(
            "counital maps of H_Θ differ from the twist formulas".into(),
        ));
    }
    Ok(Twisted {
        algebra: out,
        v,
        v_inv,
    })
}

// ---- dynamical twists ---------------------------------------------------------

/// Characters of a finite abelian group of group-likes, valued in ζₑ powers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharacterTable {
    pub exponent: u32,
    /// `table[a*m + b]` is the index of the product of elements a and b.
    pub table: Vec<usize>,
    pub identity: usize,
    /// `values[λ][a] = k` means λ(a) = ζₑᵏ; the trivial character comes first.
    pub values: Vec<Vec<u32>>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Index of the product character λμ (written λ+μ additively).
    pub fn add(&self, l: usize, m: usize) -> usize {
        let e = self.exponent;
        let want: Vec<u32> = self.values[l]
            .iter()
            .zip(&self.values[m])
            .map(|(a, b)| (a + b) % e)
            .collect();
        self.index_of(&want)
    }

    pub fn neg(&self, l: usize) -> usize {
        let e = self.exponent;
        let want: Vec<u32> = self.values[l].iter().map(|a| (e - a) % e).collect();
        self.index_of(&want)
    }

    fn index_of(&self, want: &[u32]) -> usize {
        self.values
            .iter()
            .position(|v| v == want)
            .expect("characters form a group")
    }

    fn inverse(&self, a: usize) -> usize {
        let m = self.order();
        (0..m)
            .find(|&b| self.table[a * m + b] == self.identity)
            .expect("group elements are invertible")
    }
}

/// Multiplication table and characters of the group formed by `group` in U.
pub fn character_table(u: &WeakHopfAlgebra, group: &[Element]) -> Result<CharacterTable> {
    let unmet = |m: String| Err(Error::PreconditionUnmet(m));
    let m = group.len();
    if m == 0 {
        return unmet("the group of group-likes is empty".into());
    }
    for (i, a) in group.iter().enumerate() {
        if !is_grouplike(u, a) || !u.eps(a).is_one() {
            return unmet(format!("element {} is not group-like", i));
        }
        if group[..i].contains(a) {
            return unmet(format!("element {} is repeated", i));
        }
    }
    let mut table = Vec::with_capacity(m * m);
    for a in group {
        for b in group {
            let ab = u.mul(a, b);
            if ab != u.mul(b, a) {
                return unmet("the group is not abelian".into());
            }
            match group.iter().position(|x| *x == ab) {
                Some(k) => table.push(k),
                None => return unmet("the group is not closed under multiplication".into()),
            }
        }
    }
    let identity = group
        .iter()
        .position(|x| x == u.unit())
        .ok_or_else(|| Error::PreconditionUnmet("the group lacks the unit".into()))?;
    let power = |a: usize, k: usize| (0..k).fold(identity, |acc, _| table[acc * m + a]);
    let order_of = |a: usize| (1..=m).find(|&k| power(a, k) == identity).unwrap_or(m);
    let exponent = (0..m).fold(1usize, |acc, a| num_integer::lcm(acc, order_of(a)));

    // greedy generators, each outside the subgroup spanned by the previous ones
    let mut gens: Vec<usize> = Vec::new();
    let mut span: Vec<usize> = vec![identity];
    for a in 0..m {
        if span.contains(&a) {
            continue;
        }
        gens.push(a);
        let mut grown = span.clone();
        for &s in &span {
            for k in 1..order_of(a) {
                let x = table[s * m + power(a, k)];
                if !grown.contains(&x) {
                    grown.push(x);
                }
            }
        }
        span = grown;
    }
    let orders: Vec<usize> = gens.iter().map(|&g| order_of(g)).collect();

    // every element as a word in the generators
    let mut words: Vec<Option<Vec<usize>>> = vec![None; m];
    let mut exps = vec![0usize; gens.len()];
    loop {
        let x = gens
            .iter()
            .zip(&exps)
            .fold(identity, |acc, (&g, &k)| table[acc * m + power(g, k)]);
        if words[x].is_none() {
            words[x] = Some(exps.clone());
        }
        let mut pos = gens.len();
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            exps[pos] += 1;
            if exps[pos] < orders[pos] {
                done = false;
                break;
            }
            exps[pos] = 0;
        }
        if done {
            break;
        }
    }
    let words: Vec<Vec<usize>> = words.into_iter().map(|w| w.expect("generated")).collect();

    // a character sends generator i to a power of ζₑ whose order divides orders[i]
    let mut values = Vec::new();
    let mut ks = vec![0usize; gens.len()];
    loop {
        let chi: Vec<u32> = words
            .iter()
            .map(|w| (w.iter().zip(&ks).map(|(n, k)| n * k).sum::<usize>() % exponent) as u32)
            .collect();
        let hom = (0..m).all(|a| {
            (0..m).all(|b| (chi[a] + chi[b]) % exponent as u32 == chi[table[a * m + b]])
        });
        if hom && !values.contains(&chi) {
            values.push(chi);
        }
        let mut pos = gens.len();
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            ks[pos] += exponent / orders[pos];
            if ks[pos] < exponent {
                done = false;
                break;
            }
            ks[pos] = 0;
        }
        if done {
            break;
        }
    }
    if values.len() != m {
        return Err(Error::Mismatch(format!(
            "found {} characters for a group of order {}",
            values.len(),
            m
        )));
    }
    Ok(CharacterTable {
        exponent: exponent as u32,
        table,
        identity,
        values,
    })
}

/// A Hopf algebra U, a finite abelian group of its group-likes and a family
/// J(λ) ∈ U⊗U indexed by the characters in `character_table` order.
#[derive(Clone, Debug, PartialEq)]
pub struct DynamicalTwistData {
    pub u: WeakHopfAlgebra,
    pub group: Vec<Element>,
    pub j: Vec<Element>,
}

impl DynamicalTwistData {
    /// J ≡ 1⊗1.
    pub fn trivial(u: WeakHopfAlgebra, group: Vec<Element>) -> Self {
        let one = u.tensor(u.unit(), u.unit());
        let j = vec![one; group.len()];
        DynamicalTwistData { u, group, j }
    }
}

/// Inverse in U⊗U.
fn tensor_inverse(u: &WeakHopfAlgebra, t: &[Scalar]) -> Option<Element> {
    let nn = u.dim() * u.dim();
    let cols: Vec<Vector> = (0..nn)
        .map(|k| u.tensor_mul(t, &crate::linalg::unit_vector(nn, k)))
        .collect();
    let one = u.tensor(u.unit(), u.unit());
    let sol = Matrix::from_columns(nn, &cols).solve(&one).ok()?;
    if sol.kernel.dim() > 0 || u.tensor_mul(&sol.particular, t) != one {
        return None;
    }
    Some(sol.particular)
}

/// P_μ = (1/|A|)Σ_a μ(a⁻¹)a.
fn projection(u: &WeakHopfAlgebra, group: &[Element], chars: &CharacterTable, mu: usize) -> Result<Element> {
    let m = group.len();
    let mut out = u.zero();
    for (a, x) in group.iter().enumerate() {
        let k = chars.values[mu][chars.inverse(a)];
        let c = u.field().root_of_unity(chars.exponent, k as i64)?;
        out = add_vectors(&out, &scale_vector(&c, x));
    }
    Ok(scale_vector(&Scalar::ratio(1, m as i64), &out))
}

/// (Δ⊗id)T for T ∈ U⊗U, as a sparse element of U⊗U⊗U.
fn comul_left_leg(u: &WeakHopfAlgebra, t: &[Scalar]) -> Sparse {
    let d = u.dim();
    let mut out = Vec::new();
    for (pq, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (ab, x) in u.comul_basis(pq / d) {
            out.push((ab * d + pq % d, c * x));
        }
    }
    canonical(out, d * d * d)
}

/// (id⊗Δ)T.
fn comul_right_leg(u: &WeakHopfAlgebra, t: &[Scalar]) -> Sparse {
    let d = u.dim();
    let mut out = Vec::new();
    for (pq, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (ab, x) in u.comul_basis(pq % d) {
            out.push(((pq / d) * d * d + ab, c * x));
        }
    }
    canonical(out, d * d * d)
}

fn canonical(entries: Vec<(usize, Scalar)>, len: usize) -> Sparse {
    let mut dense = zero_vector(len);
    for (i, c) in entries {
        dense[i] += &c;
    }
    sparse_from_dense(&dense)
}

/// Tensor T ⊗ x in U⊗U⊗U for T ∈ U⊗U (or x ⊗ T when `front`).
fn extend(u: &WeakHopfAlgebra, t: &[Scalar], x: &[Scalar], front: bool) -> Sparse {
    let d = u.dim();
    let mut out = Vec::new();
    for (pq, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (r, y) in x.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let idx = if front { r * d * d + pq } else { pq * d + r };
            out.push((idx, c * y));
        }
    }
    canonical(out, d * d * d)
}

/// Checks every dynamical twist condition on the data.
pub fn check_dynamical_data(d: &DynamicalTwistData) -> Result<CharacterTable> {
    let u = &d.u;
    let unmet = |m: String| Err(Error::PreconditionUnmet(m));
    if !u.is_hopf() || u.target_base().dim() != 1 {
        return unmet("U is not a Hopf algebra".into());
    }
    u.antipode()?;
    let chars = character_table(u, &d.group)?;
    if !u.field().contains_roots_of_unity(chars.exponent) {
        return Err(Error::FieldTooSmall(format!(
            "{} lacks the {}-th roots of unity",
            u.field(),
            chars.exponent
        )));
    }
    let m = chars.order();
    let nn = u.dim() * u.dim();
    if d.j.len() != m || d.j.iter().any(|t| t.len() != nn) {
        return Err(Error::DimensionMismatch(format!(
            "J needs {} tensors in U⊗U",
            m
        )));
    }
    let projections: Vec<Element> = (0..m)
        .map(|mu| projection(u, &d.group, &chars, mu))
        .collect::<Result<_>>()?;
    for (l, jl) in d.j.iter().enumerate() {
        if tensor_inverse(u, jl).is_none() {
            return unmet(format!("J({}) is not invertible", l));
        }
        // (ε⊗id)J = (id⊗ε)J = 1
        let dim = u.dim();
        let mut left = u.zero();
        let mut right = u.zero();
        for (pq, c) in jl.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (p, q) = (pq / dim, pq % dim);
            left[q] += &(c * &u.counit()[p]);
            right[p] += &(c * &u.counit()[q]);
        }
        if left != *u.unit() || right != *u.unit() {
            return unmet(format!("J({}) is not normalized", l));
        }
        for (a, x) in d.group.iter().enumerate() {
            let da = u.comul(x);
            if u.tensor_mul(jl, &da) != u.tensor_mul(&da, jl) {
                return unmet(format!("J({}) does not commute with Δ of element {}", l, a));
            }
        }
    }
    for (l, jl) in d.j.iter().enumerate() {
        let mut shifted = Vec::new();
        for (mu, p) in projections.iter().enumerate() {
            shifted.extend(extend(u, &d.j[chars.add(l, mu)], p, false));
        }
        let shifted = canonical(shifted, nn * u.dim());
        let lhs = u.tensor_mul_sparse(3, &comul_left_leg(u, jl), &shifted);
        let rhs = u.tensor_mul_sparse(3, &comul_right_leg(u, jl), &extend(u, jl, u.unit(), true));
        if lhs != rhs {
            let len = nn * u.dim();
            let (a, b) = (dense_from_sparse(len, &lhs), dense_from_sparse(len, &rhs));
            return Err(Error::DynamicalEquationViolated {
                character: l,
                residual: residual(&a, &b),
            });
        }
    }
    Ok(chars)
}

/// The twist induced on M_m ⊗ U, m = |A|, with the host it lives on.
#[derive(Clone, Debug)]
pub struct DynamicalTwist {
    pub host: WeakHopfAlgebra,
    pub twist: Twist,
    pub characters: CharacterTable,
    pub projections: Vec<Element>,
}

impl DynamicalTwist {
    /// E_{xy} ⊗ u in the host.
    pub fn embed(&self, x: usize, y: usize, u: &[Scalar]) -> Element {
        let m = self.characters.order();
        let d = u.len();
        let mut out = zero_vector(self.host.dim());
        for (k, c) in u.iter().enumerate() {
            out[(x * m + y) * d + k] = c.clone();
        }
        out
    }

    /// span{E_ββ ⊗ 1}.
    pub fn expected_source_base(&self, u: &WeakHopfAlgebra) -> Subspace {
        let m = self.characters.order();
        Subspace::from_vectors(
            self.host.dim(),
            (0..m).map(|b| self.embed(b, b, u.unit())),
        )
    }

    /// span{Σ_λ E_λλ ⊗ P_{α−λ}}, read off from ε(Θ⁽¹⁾E_αβ)Θ⁽²⁾.
    pub fn expected_target_base(&self) -> Subspace {
        let chars = &self.characters;
        let m = chars.order();
        let vectors = (0..m).map(|alpha| {
            (0..m).fold(zero_vector(self.host.dim()), |acc, l| {
                let p = &self.projections[chars.add(alpha, chars.neg(l))];
                add_vectors(&acc, &self.embed(l, l, p))
            })
        });
        Subspace::from_vectors(self.host.dim(), vectors)
    }
}

/// Assembles Θ = Σ E_{λ,λ+μ}J⁽¹⁾(λ) ⊗ E_{λλ}J⁽²⁾(λ)P_μ and
/// Θ̄ = Σ E_{λ+μ,λ}J⁻⁽¹⁾(λ) ⊗ E_{λλ}P_μJ⁻⁽²⁾(λ).
pub fn dynamical_theta(d: &DynamicalTwistData) -> Result<DynamicalTwist> {
    let chars = check_dynamical_data(d)?;
    let u = &d.u;
    let m = chars.order();
    let dim = u.dim();
    let host = matrix_wha(m).over(u.field())?.tensor_product(u)?;
    let projections: Vec<Element> = (0..m)
        .map(|mu| projection(u, &d.group, &chars, mu))
        .collect::<Result<_>>()?;
    let big = host.dim();
    let mut theta = zero_vector(big * big);
    let mut theta_bar = zero_vector(big * big);
    let pos = |x: usize, y: usize, k: usize| (x * m + y) * dim + k;
    for l in 0..m {
        let j = &d.j[l];
        let j_inv = tensor_inverse(u, j).expect("checked invertible");
        for (mu, p) in projections.iter().enumerate() {
            let lm = chars.add(l, mu);
            for (pq, c) in j.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let right = u.mul(&u.basis_element(pq % dim), p);
                for (k, r) in right.iter().enumerate() {
                    if !r.is_zero() {
                        theta[pos(l, lm, pq / dim) * big + pos(l, l, k)] += &(c * r);
                    }
                }
            }
            for (pq, c) in j_inv.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let right = u.mul(p, &u.basis_element(pq % dim));
                for (k, r) in right.iter().enumerate() {
                    if !r.is_zero() {
                        theta_bar[pos(lm, l, pq / dim) * big + pos(l, l, k)] += &(c * r);
                    }
                }
            }
        }
    }
    let twist = Twist { theta, theta_bar };
    check_twist(&host, &twist)?;
    Ok(DynamicalTwist {
        host,
        twist,
        characters: chars,
        projections,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockTrace {
    pub idempotent: String,
    pub degree: usize,
    pub trace_g: Scalar,
    pub trace_g_inv: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CosemisimplicityReport {
    pub dim: usize,
    pub source_base_dim: usize,
    pub target_base_dim: usize,
    /// The bases equal span{E_ββ} and span{Σ_λ E_λλP_{α−λ}}.
    pub bases_as_expected: bool,
    /// S_Θ² is conjugation by g⁻¹, g = S(v)⁻¹v.
    pub s2_is_inner: bool,
    pub blocks: Vec<BlockTrace>,
    pub tr_s2_direct: Scalar,
    pub tr_s2_blocks: Scalar,
    pub connected: bool,
    pub biconnected: bool,
    pub regular: bool,
    /// Biconnected, regular and Tr(S²) ≠ 0.
    pub dual_semisimple_by_trace: bool,
    pub dual_semisimple_by_maschke: bool,
}

impl CosemisimplicityReport {
    pub fn passed(&self) -> bool {
        let dim = Scalar::int(self.dim as i64);
        self.bases_as_expected
            && self.s2_is_inner
            && self.blocks.iter().all(|b| {
                let deg = Scalar::int(b.degree as i64);
                b.trace_g == deg && b.trace_g_inv == deg
            })
            && self.tr_s2_direct == dim
            && self.tr_s2_blocks == dim
            && self.dual_semisimple_by_trace
            && self.dual_semisimple_by_maschke
    }
}

/// Verifies Tr π(g) = deg π on every block of the host and the consequences
/// Tr(S_Θ²) = dim H_Θ and semisimplicity of the dual.
pub fn dynamical_cosemisimplicity_check(d: &DynamicalTwistData) -> Result<CosemisimplicityReport> {
    if !is_semisimple(&d.u) {
        return Err(Error::PreconditionUnmet("U is not semisimple".into()));
    }
    let dt = dynamical_theta(d)?;
    let tw = twist_full(&dt.host, &dt.twist)?;
    let h = &dt.host;
    let ht = &tw.algebra;
    let s = h.antipode()?;
    let s_v_inv = h.invert_element(&s.apply(&tw.v))?;
    let g = h.mul(&s_v_inv, &tw.v);
    let g_inv = h.invert_element(&g)?;
    let st = ht.antipode()?;
    let st2 = st.mul(st);
    let ad = h.left_mult_matrix(&g_inv).mul(&h.right_mult_matrix(&g));
    let mut blocks = Vec::new();
    let mut tr_blocks = Scalar::zero();
    for z in primitive_idempotents(h, &h.center())? {
        let size = h.left_mult_matrix(&z).trace();
        let deg = (1..=h.dim())
            .find(|k| Scalar::int((k * k) as i64) == size)
            .ok_or_else(|| Error::NonSplit("block is not a full matrix algebra".into()))?;
        let per = |x: &[Scalar]| h.left_mult_matrix(&h.mul(&z, x)).trace() / Scalar::int(deg as i64);
        let trace_g = per(&g);
        let trace_g_inv = per(&g_inv);
        tr_blocks += &(&trace_g * &trace_g_inv);
        blocks.push(BlockTrace {
            idempotent: element_label(h, &z),
            degree: deg,
            trace_g,
            trace_g_inv,
        });
    }
    let tr_s2_direct = st2.trace();
    let conn = connectedness(ht);
    let regular = ht.is_regular()?;
    let source = ht.source_base();
    let target = ht.target_base();
    Ok(CosemisimplicityReport {
        dim: ht.dim(),
        source_base_dim: source.dim(),
        target_base_dim: target.dim(),
        bases_as_expected: source == dt.expected_source_base(&d.u)
            && target == dt.expected_target_base(),
        s2_is_inner: st2 == ad,
        blocks,
        dual_semisimple_by_trace: conn.biconnected && regular && !tr_s2_direct.is_zero(),
        tr_s2_direct,
        tr_s2_blocks: tr_blocks,
        connected: conn.connected,
        biconnected: conn.biconnected,
        regular,
        dual_semisimple_by_maschke: is_semisimple(&ht.dualize()),
    })
}

/// The counital bases of two twisted hosts coincide.
pub fn same_bases(a: &WeakHopfAlgebra, b: &WeakHopfAlgebra) -> bool {
    a.source_base() == b.source_base() && a.target_base() == b.target_base()
}

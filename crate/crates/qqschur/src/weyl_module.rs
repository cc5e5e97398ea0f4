//! Specht modules, Weyl modules, their semistandard vectors and Gram forms.
//!
//! The Specht module is the right ideal generated by the canonical element;
//! its generic rank equals the number of standard bitableaux.  The Weyl
//! module lives on the other side: its weight space for a type shape is
//! spanned by one vector per semistandard tableau, each obtained by pushing
//! a coset map's generator image through the column-symmetrized tail.  The
//! contracted bilinear form pairs the half-tail against the full tail; its
//! rank at a specialization is the dimension of the irreducible head.

use crate::coeff::CoeffRing;
use crate::hecke::{Algebra, HeckeElt};
use crate::linalg::LinAlg;
use crate::perm_module::ModuleElt;
use crate::shapes::{shapes, Bicomposition};
use crate::tableaux::{
    coord_map, coord_map_inv, order_less, pi_hat, typed_tableaux, Bitableau, Bitabloid, CoordMap,
    TypedBitableau, TypedKind,
};

/// A semistandard basis vector of a Weyl-module weight space.
#[derive(Clone, Debug)]
pub struct WeylVector<E> {
    pub label: TypedBitableau,
    pub mu: Bicomposition,
    pub value: ModuleElt<E>,
}

impl<R: CoeffRing> Algebra<R> {
    /// `h_{a,r-a} T_{pi_hat} u^-_{r-a} y_hat`, the tail turning a generator
    /// image into a Weyl vector.
    pub fn weyl_tail(&self, lambda: &Bicomposition) -> Result<HeckeElt<R::Elem>, crate::Error> {
        let a = lambda.a();
        let r = self.r();
        let h = self.hecke_mul(&self.h_elt(a)?, &self.t_perm(&pi_hat(lambda)));
        let h = self.hecke_mul(&h, &self.u_minus(r - a)?);
        Ok(self.hecke_mul(&h, &self.y_hat_elt(lambda)))
    }

    /// `h_{a,r-a} T_{pi_hat}`, the half tail used on the left of the
    /// contracted form.
    pub fn weyl_half_tail(
        &self,
        lambda: &Bicomposition,
    ) -> Result<HeckeElt<R::Elem>, crate::Error> {
        let a = lambda.a();
        Ok(self.hecke_mul(&self.h_elt(a)?, &self.t_perm(&pi_hat(lambda))))
    }

    /// The canonical Specht generator in bitabloid coordinates.
    pub fn z_module(&self, lambda: &Bicomposition) -> Result<ModuleElt<R::Elem>, crate::Error> {
        if !lambda.is_bipartition() {
            return Err(crate::Error::ShapeMismatch(format!(
                "{:?} is not a bipartition",
                lambda
            )));
        }
        let gen = self.module_gen(lambda);
        Ok(self.act_hecke(&gen, &self.weyl_tail(lambda)?))
    }

    /// `<<z, z>>`: pair the half tail against the full tail.
    pub fn z_gram_value(&self, lambda: &Bicomposition) -> Result<R::Elem, crate::Error> {
        let gen = self.module_gen(lambda);
        let a_side = self.act_hecke(&gen, &self.weyl_half_tail(lambda)?);
        let v_side = self.z_module(lambda)?;
        Ok(self.bilinear(&a_side, &v_side))
    }
}

impl<R: CoeffRing + LinAlg> Algebra<R> {
    /// Rank of the span of the Specht generator's orbit inside the module.
    pub fn specht_rank(&self, lambda: &Bicomposition) -> Result<usize, crate::Error> {
        let z = self.z_module(lambda)?;
        let dim = self.shape_data(lambda).basis.len();
        let rows: Vec<Vec<R::Elem>> = self
            .group
            .all()
            .map(|e| {
                let m = self.act_elem(&z, e);
                let mut row = vec![self.ring.zero(); dim];
                for (&b, c) in &m.coeffs {
                    row[b] = c.clone();
                }
                row
            })
            .collect();
        Ok(self.ring.mat_rank(rows))
    }

    /// The semistandard vectors of the weight space for `mu`.
    pub fn weyl_vectors(
        &self,
        lambda: &Bicomposition,
        mu: &Bicomposition,
    ) -> Result<Vec<WeylVector<R::Elem>>, crate::Error> {
        let ss = typed_tableaux(lambda, mu, TypedKind::Semistandard);
        if ss.is_empty() {
            return Ok(Vec::new());
        }
        let triples = self.admissibles(lambda, mu);
        let mut picked = Vec::with_capacity(ss.len());
        for t in &ss {
            let toid = coord_map_inv(CoordMap::Alpha, mu, t)?;
            let c = self.group.idx(&toid.perm_from_row_filling());
            let triple = triples
                .iter()
                .find(|tr| tr.in_delta && tr.c == c)
                .ok_or_else(|| {
                    crate::Error::Internal(format!(
                        "no coset triple for semistandard tableau {:?}",
                        t
                    ))
                })?;
            picked.push(*triple);
        }
        let phis = self.phi_standard_batch(lambda, mu, &picked)?;
        let tail = self.weyl_tail(lambda)?;
        Ok(ss
            .into_iter()
            .zip(phis)
            .map(|(label, phi)| WeylVector {
                label,
                mu: mu.clone(),
                value: self.act_hecke(&phi.gen_image, &tail),
            })
            .collect())
    }

    /// All semistandard vectors over the type shapes with `n` parts.
    pub fn weyl_basis(
        &self,
        lambda: &Bicomposition,
        n: usize,
    ) -> Result<Vec<WeylVector<R::Elem>>, crate::Error> {
        let mut out = Vec::new();
        for mu in shapes(n, self.r()) {
            out.extend(self.weyl_vectors(lambda, &mu)?);
        }
        Ok(out)
    }

    /// Combinatorial dimension: the number of semistandard labels.
    pub fn weyl_dim(&self, lambda: &Bicomposition, n: usize) -> usize {
        shapes(n, self.r())
            .iter()
            .map(|mu| typed_tableaux(lambda, mu, TypedKind::Semistandard).len())
            .sum()
    }

    /// Rank of a family of vectors in one weight space.
    pub fn weight_rank(&self, mu: &Bicomposition, vs: &[ModuleElt<R::Elem>]) -> usize {
        let dim = self.shape_data(mu).basis.len();
        let rows: Vec<Vec<R::Elem>> = vs
            .iter()
            .map(|m| {
                let mut row = vec![self.ring.zero(); dim];
                for (&b, c) in &m.coeffs {
                    row[b] = c.clone();
                }
                row
            })
            .collect();
        self.ring.mat_rank(rows)
    }

    /// The Gram matrix of the contracted form on the semistandard family,
    /// blocked by weight (distinct weights pair to zero).
    pub fn gram_matrix(
        &self,
        lambda: &Bicomposition,
        n: usize,
    ) -> Result<GramData<R::Elem>, crate::Error> {
        let mut labels = Vec::new();
        let mut blocks = Vec::new();
        for mu in shapes(n, self.r()) {
            let vs = self.weyl_vectors(lambda, &mu)?;
            if vs.is_empty() {
                continue;
            }
            // the left side of each pairing drops the column symmetrizer
            let half = self.weyl_half_tail(lambda)?;
            let ss = typed_tableaux(lambda, &mu, TypedKind::Semistandard);
            let triples = self.admissibles(lambda, &mu);
            let mut picked = Vec::new();
            for t in &ss {
                let toid = coord_map_inv(CoordMap::Alpha, &mu, t)?;
                let c = self.group.idx(&toid.perm_from_row_filling());
                picked.push(
                    *triples
                        .iter()
                        .find(|tr| tr.in_delta && tr.c == c)
                        .expect("established by weyl_vectors"),
                );
            }
            let phis = self.phi_standard_batch(lambda, &mu, &picked)?;
            let a_side: Vec<ModuleElt<R::Elem>> = phis
                .iter()
                .map(|phi| self.act_hecke(&phi.gen_image, &half))
                .collect();
            let block: Vec<Vec<R::Elem>> = a_side
                .iter()
                .map(|a| vs.iter().map(|v| self.bilinear(a, &v.value)).collect())
                .collect();
            for v in vs {
                labels.push((mu.clone(), v.label));
            }
            blocks.push(block);
        }
        Ok(GramData { labels, blocks })
    }

    /// Rank of the contracted form: the dimension of the irreducible head.
    pub fn gram_rank(&self, lambda: &Bicomposition, n: usize) -> Result<usize, crate::Error> {
        let g = self.gram_matrix(lambda, n)?;
        Ok(g.blocks
            .into_iter()
            .map(|b| self.ring.mat_rank(b))
            .sum())
    }
}

impl<R: CoeffRing + LinAlg> Algebra<R> {
    /// Irreducible dimensions per bipartition at the context's parameters.
    pub fn irreducible_dims(
        &self,
        n: usize,
    ) -> Result<Vec<(Bicomposition, usize)>, crate::Error> {
        crate::shapes::bipartitions(self.r())
            .into_iter()
            .map(|l| {
                let d = self.gram_rank(&l, n)?;
                Ok((l, d))
            })
            .collect()
    }
}

/// Gram matrix in block form, one block per nonempty weight.
#[derive(Clone, Debug)]
pub struct GramData<E> {
    pub labels: Vec<(Bicomposition, TypedBitableau)>,
    pub blocks: Vec<Vec<Vec<E>>>,
}

impl<E: Clone> GramData<E> {
    /// Assemble the full block-diagonal matrix (zeros off the blocks).
    pub fn full_matrix(&self, zero: E) -> Vec<Vec<E>> {
        let total = self.labels.len();
        let mut m = vec![vec![zero; total]; total];
        let mut off = 0;
        for block in &self.blocks {
            let k = block.len();
            for (i, row) in block.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    m[off + i][off + j] = v.clone();
                }
            }
            off += k;
        }
        m
    }
}

/// The leading-class data of a Weyl vector: the unique class mapped to the
/// label under the column-reading coordinate map.
pub fn leading_class(
    label: &TypedBitableau,
    mu: &Bicomposition,
) -> Result<Bitabloid, crate::Error> {
    coord_map_inv(CoordMap::Gamma, mu, label)
}

/// Check the triangular support property of a Weyl vector: modulo the
/// negative span it is supported on classes whose column-reading image is
/// at least the label, with a unit coefficient at the leading class.
pub fn leading_term_report<R: CoeffRing>(
    alg: &Algebra<R>,
    v: &WeylVector<R::Elem>,
    is_unit: impl Fn(&R::Elem) -> bool,
) -> Result<(), String> {
    let mu = &v.mu;
    let lead = leading_class(&v.label, mu).map_err(|e| e.to_string())?;
    let data = alg.shape_data(mu);
    let reduced = alg.reduce_mod_minus(&v.value);
    let lead_idx = data.index[&lead];
    match reduced.coeffs.get(&lead_idx) {
        None => return Err(format!("missing leading class {:?}", lead)),
        Some(c) => {
            if !is_unit(c) {
                return Err(format!("leading coefficient {:?} is not a unit", c));
            }
        }
    }
    for &b in reduced.coeffs.keys() {
        if b == lead_idx {
            continue;
        }
        let img = coord_map(CoordMap::Gamma, &v.label.shape, &data.basis[b]);
        if order_less(&img, &v.label) {
            return Err(format!(
                "support class {:?} maps below the label {:?}",
                data.basis[b], v.label
            ));
        }
    }
    Ok(())
}

/// Number of standard bitableaux, the generic Specht rank.
pub fn standard_count(shape: &Bicomposition) -> usize {
    crate::tableaux::standard_bitableaux(shape).len()
}

/// The class of the swapped column-reading filling, whose monomial enters
/// the closed Gram value of the canonical generator.
pub fn hat_col_class(shape: &Bicomposition) -> Bitabloid {
    Bitabloid::new(&Bitableau::t_col_hat(shape))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{GenericRing, RationalSpec};
    use crate::laurent::LaurentPoly;

    fn alg(r: usize) -> Algebra<GenericRing> {
        Algebra::new(r, GenericRing)
    }

    fn bc(first: &[usize], second: &[usize]) -> Bicomposition {
        Bicomposition::new(first.to_vec(), second.to_vec())
    }

    #[test]
    fn specht_ranks_rank_two() {
        let a = alg(2);
        // single boxes: two standard bitableaux
        assert_eq!(a.specht_rank(&bc(&[1], &[1])).unwrap(), 2);
        assert_eq!(standard_count(&bc(&[1], &[1])), 2);
        // one-row shape: one-dimensional
        assert_eq!(a.specht_rank(&bc(&[2], &[])).unwrap(), 1);
        for shape in crate::shapes::bipartitions(2) {
            assert_eq!(
                a.specht_rank(&shape).unwrap(),
                standard_count(&shape),
                "{:?}",
                shape
            );
        }
    }

    #[test]
    fn gram_value_golden() {
        let a = alg(2);
        let l = bc(&[1], &[1]);
        // Q q for the rank-two single-box shape
        let v = a.z_gram_value(&l).unwrap();
        assert_eq!(v, LaurentPoly::monomial(1.into(), 1, 1));
        // closed form across rank-2 bipartitions
        for shape in crate::shapes::bipartitions(2) {
            let ra = shape.r() - shape.a();
            let cls = hat_col_class(&shape);
            let w = cls.perm_from_row_filling();
            let (qa, qb) = w.qlt_exponents();
            let expect = LaurentPoly::monomial(
                1.into(),
                qa + (ra * ra.saturating_sub(1) / 2) as i32,
                qb + ra as i32,
            );
            assert_eq!(a.z_gram_value(&shape).unwrap(), expect, "{:?}", shape);
        }
    }

    #[test]
    fn weyl_vectors_weight_lambda_is_z() {
        let a = alg(2);
        let l = bc(&[1], &[1]);
        let vs = a.weyl_vectors(&l, &l).unwrap();
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].value, a.z_module(&l).unwrap());
    }

    #[test]
    fn weyl_weight_ranks_rank_two() {
        let a = alg(2);
        let n = 2;
        for l in crate::shapes::bipartitions(2) {
            for mu in shapes(n, 2) {
                let vs = a.weyl_vectors(&l, &mu).unwrap();
                let expect = typed_tableaux(&l, &mu, TypedKind::Semistandard).len();
                assert_eq!(vs.len(), expect);
                let vals: Vec<_> = vs.iter().map(|v| v.value.clone()).collect();
                assert_eq!(a.weight_rank(&mu, &vals), expect, "{:?} {:?}", l, mu);
                for v in &vs {
                    leading_term_report(&a, v, |c| c.is_unit_monomial()).unwrap();
                }
            }
        }
    }

    #[test]
    fn gram_rank_full_generically_rank_two() {
        let a = alg(2);
        for l in crate::shapes::bipartitions(2) {
            let dim = a.weyl_dim(&l, 2);
            assert_eq!(a.gram_rank(&l, 2).unwrap(), dim, "{:?}", l);
        }
    }

    #[test]
    fn gram_rank_can_drop_at_special_parameters() {
        // q = 1, Q = -1 collapses part of the form at rank 2
        let ring = RationalSpec::from_ints(1, -1).unwrap();
        let a = Algebra::new(2, ring);
        let mut dropped = false;
        for l in crate::shapes::bipartitions(2) {
            let dim = a.weyl_dim(&l, 2);
            let rank = a.gram_rank(&l, 2).unwrap();
            assert!(rank >= 1, "anisotropic generator keeps rank positive");
            assert!(rank <= dim);
            if rank < dim {
                dropped = true;
            }
        }
        assert!(dropped, "expected at least one degenerate form");
    }

    #[test]
    fn integral_roundtrip_through_weyl_basis() {
        let a = alg(2);
        let l = bc(&[1], &[1]);
        let mu = bc(&[1], &[1]);
        let vs = a.weyl_vectors(&l, &mu).unwrap();
        let dim = a.shape_data(&mu).basis.len();
        let cols: Vec<Vec<LaurentPoly>> = vs
            .iter()
            .map(|v| {
                let mut col = vec![LaurentPoly::zero(); dim];
                for (&b, c) in &v.value.coeffs {
                    col[b] = c.clone();
                }
                col
            })
            .collect();
        // combination with Laurent coefficients comes back with the same
        let mut target = vec![LaurentPoly::zero(); dim];
        let coeff = LaurentPoly::monomial(3.into(), -1, 1);
        for (i, c) in cols[0].iter().enumerate() {
            target[i] = c.mul(&coeff);
        }
        let mut mat = vec![vec![LaurentPoly::zero(); vs.len()]; dim];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter().enumerate() {
                mat[i][j] = c.clone();
            }
        }
        let sol = GenericRing.solve_columns(mat, vec![target]).unwrap();
        assert_eq!(sol[0][0], coeff);
    }
}

//! Iterated root adjunction kept in a single absolute presentation.
//!
//! Each step factors the incoming polynomial over the current field,
//! adjoins a root of one non-linear factor, finds a primitive element
//! `new generator = old generator + c * root`, and rebuilds everything
//! over the new absolute field.  Images of the base generator and of every
//! adjoined root are carried along, so later steps can evaluate any
//! expression in the roots without revisiting earlier levels.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::is_irreducible_q;
use crate::linalg::{self, SpanBuilder};
use crate::numfield::{trager_factor, KPoly, NfElem, NumberField};
use crate::poly::rational::eval_point;
use crate::{Config, Rat, RatPoly};

/// Record of one adjunction step.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjoinInfo {
    /// Degrees of the factors of the adjoined polynomial over the field
    /// before the step, ascending, with multiplicity.
    pub factor_pattern: Vec<usize>,
    /// Degree of the factor whose root was adjoined.
    pub adjoined_degree: usize,
    /// The constant in `new generator = old generator + shift * root`.
    pub shift: Rat,
    /// Absolute degree after the step.
    pub new_degree: usize,
}

/// A tower of root adjunctions over a base number field, presented
/// absolutely: the current [`NumberField`] is generated by a single
/// primitive element, and all tower data lives in its coordinates.
#[derive(Clone, Debug)]
pub struct TowerField {
    base_minpoly: RatPoly,
    absolute: NumberField,
    /// Relative degree of each level; index 0 is the base field degree.
    rel_degrees: Vec<usize>,
    /// Primitive-element shift used at each adjunction step.
    shifts: Vec<Rat>,
    /// Image in the current absolute field of the base generator
    /// (index 0) and of each adjoined root.
    gen_images: Vec<NfElem>,
    /// Image of each level's absolute generator in the current field;
    /// the last entry is the current generator itself.
    abs_gens: Vec<NfElem>,
    /// Minimal polynomial of each adjoined root over its level, with
    /// coefficients written as polynomials in that level's generator.
    rel_minpolys: Vec<Vec<RatPoly>>,
}

impl TowerField {
    pub fn new(base: NumberField) -> TowerField {
        let g = base.generator();
        TowerField {
            base_minpoly: base.minpoly().clone(),
            rel_degrees: vec![base.degree()],
            shifts: Vec::new(),
            gen_images: vec![g.clone()],
            abs_gens: vec![g],
            rel_minpolys: Vec::new(),
            absolute: base,
        }
    }

    pub fn absolute(&self) -> &NumberField {
        &self.absolute
    }

    pub fn degree(&self) -> usize {
        self.absolute.degree()
    }

    pub fn levels(&self) -> usize {
        self.rel_degrees.len()
    }

    pub fn rel_degrees(&self) -> &[usize] {
        &self.rel_degrees
    }

    pub fn shifts(&self) -> &[Rat] {
        &self.shifts
    }

    pub fn gen_images(&self) -> &[NfElem] {
        &self.gen_images
    }

    /// The generator of the absolute presentation and its minimal
    /// polynomial over Q.
    pub fn primitive_element(&self) -> (NfElem, &RatPoly) {
        (self.absolute.generator(), self.absolute.minpoly())
    }

    /// Adjoin a root of `f` (irreducible over Q).  Factors `f` over the
    /// current field, picks the canonically first factor of maximal
    /// degree, and errors with [`Error::NothingToAdjoin`] when `f` already
    /// splits into linear factors.
    pub fn adjoin_root(&self, f: &RatPoly, cfg: &Config) -> Result<(TowerField, AdjoinInfo)> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.deg() < 1 {
            return Err(Error::DegreeOutOfRange {
                found: 0,
                why: "cannot adjoin a root of a constant".into(),
            });
        }
        if !is_irreducible_q(f)? {
            return Err(Error::NotIrreducible { poly: f.to_string() });
        }
        let a = &self.absolute;
        let factors = trager_factor(a, &a.kp_embed(f))?;
        let mut pattern: Vec<usize> = factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat(g.deg()).take(*m))
            .collect();
        pattern.sort_unstable();
        let dmax = *pattern.last().expect("nonconstant input has factors");
        if dmax == 1 {
            return Err(Error::NothingToAdjoin);
        }
        // canonical sort is ascending, so this is the canonically first
        // factor of maximal degree
        let p = factors
            .iter()
            .map(|(g, _)| g)
            .find(|g| g.deg() == dmax)
            .expect("factor of maximal degree")
            .clone();

        let na = a.degree();
        let dp = p.deg();
        let n_new = na * dp;
        let mut chosen: Option<(Rat, Vec<Vec<Rat>>, Vec<Rat>)> = None;
        for idx in 0..cfg.primitive_search_budget {
            // shift sequence 1, -1, 2, -2, ...
            let c = eval_point(idx + 1);
            let gamma = a.kp_from_coeffs(vec![a.generator(), a.from_rat(c.clone())]);
            let mut sb = SpanBuilder::new(n_new);
            let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(n_new);
            let mut cur = a.kp_one();
            let mut dep: Option<Vec<Rat>> = None;
            for _ in 0..=n_new {
                let flat = flatten(a, &cur, dp);
                match sb.offer(flat.clone()) {
                    None => {
                        powers.push(flat);
                        cur = a.kp_divrem(&a.kp_mul(&cur, &gamma), &p)?.1;
                    }
                    Some(d) => {
                        dep = Some(d);
                        break;
                    }
                }
            }
            let dep = dep.expect("dependency among dimension + 1 vectors");
            if powers.len() == n_new {
                chosen = Some((c, powers, dep));
                break;
            }
        }
        let Some((c, powers, dep)) = chosen else {
            return Err(Error::PrimitiveSearchExhausted { tried: cfg.primitive_search_budget });
        };

        // gamma^N = sum dep[j] gamma^j gives the monic minimal polynomial
        let mut gc = vec![Rat::zero(); n_new + 1];
        gc[n_new] = Rat::one();
        for (j, d) in dep.iter().enumerate() {
            gc[j] = -d.clone();
        }
        // irreducible: gamma generates a field of this exact degree
        let a2 = NumberField::new_unchecked(RatPoly::from_coeffs(gc));

        // express the old generator and the new root in gamma powers:
        // columns of the matrix are the flattened powers
        let mat: Vec<Vec<Rat>> = (0..n_new)
            .map(|i| (0..n_new).map(|j| powers[j][i].clone()).collect())
            .collect();
        let mut tau_theta = vec![Rat::zero(); n_new];
        for (u, x) in a.generator().coords().iter().enumerate() {
            tau_theta[u] = x.clone();
        }
        let mut tau_y = vec![Rat::zero(); n_new];
        tau_y[na] = Rat::one();
        let img_theta = a2.element(
            linalg::solve(&mat, &tau_theta)
                .ok_or_else(|| Error::Internal("generator image solve failed".into()))?,
        )?;
        let img_y = a2.element(
            linalg::solve(&mat, &tau_y)
                .ok_or_else(|| Error::Internal("root image solve failed".into()))?,
        )?;

        let remap = |e: &NfElem| a2.eval_poly(&a.to_poly(e), &img_theta);
        let mut gen_images: Vec<NfElem> = self.gen_images.iter().map(remap).collect();
        gen_images.push(img_y);
        let mut abs_gens: Vec<NfElem> = self.abs_gens.iter().map(remap).collect();
        abs_gens.push(a2.generator());
        let mut rel_minpolys = self.rel_minpolys.clone();
        rel_minpolys.push(p.coeffs().iter().map(|ce| a.to_poly(ce)).collect());
        let mut rel_degrees = self.rel_degrees.clone();
        rel_degrees.push(dp);
        let mut shifts = self.shifts.clone();
        shifts.push(c.clone());

        let tower = TowerField {
            base_minpoly: self.base_minpoly.clone(),
            absolute: a2,
            rel_degrees,
            shifts,
            gen_images,
            abs_gens,
            rel_minpolys,
        };
        debug_assert!(tower.verify_relations().is_ok());
        let info = AdjoinInfo {
            factor_pattern: pattern,
            adjoined_degree: dp,
            shift: c,
            new_degree: n_new,
        };
        Ok((tower, info))
    }

    /// Check every stored relation inside the current absolute field:
    /// the base generator image satisfies the base minimal polynomial,
    /// each adjoined root satisfies its relative minimal polynomial, and
    /// each level's generator is built from the previous one by its shift.
    pub fn verify_relations(&self) -> Result<()> {
        let a = &self.absolute;
        if !a.eval_poly(&self.base_minpoly, &self.gen_images[0]).is_zero() {
            return Err(Error::Internal("base generator image fails its minimal polynomial".into()));
        }
        if self.abs_gens[0] != self.gen_images[0] {
            return Err(Error::Internal("level-0 generator disagrees with base image".into()));
        }
        for i in 1..self.levels() {
            let prev = &self.abs_gens[i - 1];
            let coeffs: Vec<NfElem> = self.rel_minpolys[i - 1]
                .iter()
                .map(|cp| a.eval_poly(cp, prev))
                .collect();
            let rel: KPoly = a.kp_from_coeffs(coeffs);
            if !a.kp_eval(&rel, &self.gen_images[i]).is_zero() {
                return Err(Error::Internal(format!(
                    "adjoined root {i} fails its relative minimal polynomial"
                )));
            }
            let want = a.add(prev, &a.scale(&self.gen_images[i], &self.shifts[i - 1]));
            if want != self.abs_gens[i] {
                return Err(Error::Internal(format!("generator relation broken at level {i}")));
            }
        }
        if self.abs_gens.last() != Some(&a.generator()) {
            return Err(Error::Internal("top generator is not the field generator".into()));
        }
        Ok(())
    }
}

/// Coordinates of a residue-class polynomial (degree < `dp`) over the
/// tensor basis `y^t * theta^u`, ordered `t` major.
fn flatten(a: &NumberField, e: &KPoly, dp: usize) -> Vec<Rat> {
    let na = a.degree();
    let mut out = vec![Rat::zero(); na * dp];
    for t in 0..dp {
        let c = a.kp_coeff(e, t);
        for (u, x) in c.coords().iter().enumerate() {
            out[t * na + u] = x.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratpoly};

    #[test]
    fn sqrt2_sqrt3_compositum() {
        let base = NumberField::new(&ratpoly(&[-2, 0, 1])).unwrap();
        let tower = TowerField::new(base);
        let cfg = Config::default();
        let (tower, info) = tower.adjoin_root(&ratpoly(&[-3, 0, 1]), &cfg).unwrap();
        assert_eq!(info.factor_pattern, vec![2]);
        assert_eq!(info.adjoined_degree, 2);
        assert_eq!(info.new_degree, 4);
        assert_eq!(info.shift, rat(1));
        // sqrt2 + sqrt3 has the classical minimal polynomial
        assert_eq!(tower.absolute().minpoly(), &ratpoly(&[1, 0, -10, 0, 1]));
        let a = tower.absolute();
        let s2 = &tower.gen_images()[0];
        let s3 = &tower.gen_images()[1];
        assert_eq!(a.mul(s2, s2).as_rational(), Some(rat(2)));
        assert_eq!(a.mul(s3, s3).as_rational(), Some(rat(3)));
        assert_eq!(a.add(s2, &a.scale(s3, &rat(1))), a.generator());
        tower.verify_relations().unwrap();
    }

    #[test]
    fn adjoining_a_split_polynomial_is_refused() {
        let base = NumberField::new(&ratpoly(&[-2, 0, 1])).unwrap();
        let tower = TowerField::new(base);
        let err = tower.adjoin_root(&ratpoly(&[-2, 0, 1]), &Config::default());
        assert!(matches!(err, Err(Error::NothingToAdjoin)));
    }

    #[test]
    fn cube_root_tower_reaches_the_splitting_field() {
        let f = ratpoly(&[-2, 0, 0, 1]);
        let base = NumberField::new(&f).unwrap();
        let tower = TowerField::new(base);
        let cfg = Config::default();
        let (tower, info) = tower.adjoin_root(&f, &cfg).unwrap();
        // over Q(cbrt2) the cubic drops one linear factor
        assert_eq!(info.factor_pattern, vec![1, 2]);
        assert_eq!(info.new_degree, 6);
        // the sum of two cube roots of 2 generates a proper subfield, so
        // the shift search must move to c = -1
        assert_eq!(info.shift, rat(-1));
        let a = tower.absolute();
        let r0 = &tower.gen_images()[0];
        let r1 = &tower.gen_images()[1];
        assert!(a.eval_poly(&f, r0).is_zero());
        assert!(a.eval_poly(&f, r1).is_zero());
        assert_ne!(r0, r1);
        tower.verify_relations().unwrap();
        // all three roots now live here, so nothing remains to adjoin
        let again = tower.adjoin_root(&f, &cfg);
        assert!(matches!(again, Err(Error::NothingToAdjoin)));
    }
}

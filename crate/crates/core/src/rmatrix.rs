//! R-matrix constructors, axiom checks, the twist `R_f`, a JSON file format
//! for custom matrices, and detection of `GL(m|n)` type.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heckeunits::HeckeRep;
use crate::scalars::{parse_scalar, Coeff, Context, Scalar};
use crate::tableaux::{standard_tableaux, Partition};
use crate::tensorop::{d_operator, skew_inverse, SparseOperator};

/// A symbolic arity-2 operator with a label and an optional declared type.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrixSpec {
    pub op: SparseOperator<Scalar>,
    pub label: String,
    pub declared_type: Option<(usize, usize)>,
}

impl RMatrixSpec {
    pub fn new(op: SparseOperator<Scalar>, label: impl Into<String>) -> Result<Self> {
        if op.arity() != 2 {
            return Err(Error::Shape("an R-matrix acts on V⊗V".into()));
        }
        Ok(RMatrixSpec { op, label: label.into(), declared_type: None })
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    pub fn lift<X: Context>(&self, ctx: &X) -> Result<SparseOperator<X::C>> {
        self.op.lift(ctx)
    }
}

fn parity(i: usize, m: usize) -> i64 {
    (i >= m) as i64
}

/// The flip `v_a⊗v_b ↦ v_b⊗v_a`.
pub fn permutation(n: usize) -> Result<RMatrixSpec> {
    let mut spec = super_permutation(n, 0)?;
    spec.label = format!("P(N={n})");
    Ok(spec)
}

/// The graded flip `v_a⊗v_b ↦ (-1)^{|a||b|} v_b⊗v_a`; the first `m` basis
/// vectors are even.
pub fn super_permutation(m: usize, n: usize) -> Result<RMatrixSpec> {
    let nn = m + n;
    if nn == 0 {
        return Err(Error::Range("m + n must be positive".into()));
    }
    let mut trip = Vec::with_capacity(nn * nn);
    for a in 0..nn {
        for b in 0..nn {
            let sign = if parity(a, m) * parity(b, m) == 1 { -1 } else { 1 };
            trip.push((a * nn + b, b * nn + a, Scalar::from_i64(sign)));
        }
    }
    let op = SparseOperator::from_triplets(nn, 2, trip)?;
    Ok(RMatrixSpec { op, label: format!("P({m}|{n})"), declared_type: Some((m, n)) })
}

/// Drinfeld-Jimbo R-matrix of `GL(m|n)` with the `q - q^{-1}` terms on
/// `v_i⊗v_j`, `i < j`.
pub fn dj_glmn(m: usize, n: usize) -> Result<RMatrixSpec> {
    let nn = m + n;
    if nn == 0 {
        return Err(Error::Range("m + n must be positive".into()));
    }
    let lambda = Scalar::q().sub(&Scalar::q_pow(-1));
    let mut trip = Vec::new();
    for i in 0..nn {
        let pi = parity(i, m);
        let sign = if pi == 1 { -1 } else { 1 };
        trip.push((i * nn + i, i * nn + i, Scalar::q_pow(1 - 2 * pi as i32).mul(&Scalar::from_i64(sign))));
        for j in 0..nn {
            if i == j {
                continue;
            }
            let s = if pi * parity(j, m) == 1 { -1 } else { 1 };
            trip.push((i * nn + j, j * nn + i, Scalar::from_i64(s)));
            if i < j {
                trip.push((i * nn + j, i * nn + j, lambda.clone()));
            }
        }
    }
    let op = SparseOperator::from_triplets(nn, 2, trip)?;
    Ok(RMatrixSpec { op, label: format!("DJ GL({m}|{n})"), declared_type: Some((m, n)) })
}

/// Drinfeld-Jimbo R-matrix of `GL(m)`.
pub fn dj_gl(m: usize) -> Result<RMatrixSpec> {
    let mut spec = dj_glmn(m, 0)?;
    spec.label = format!("DJ GL({m})");
    Ok(spec)
}

fn braid_ops<C: Coeff>(r: &SparseOperator<C>) -> Result<(SparseOperator<C>, SparseOperator<C>)> {
    Ok((r.embed_at(1, 3)?, r.embed_at(2, 3)?))
}

/// `R_1 R_2 R_1 = R_2 R_1 R_2` on `V^{⊗3}`.
pub fn yang_baxter_check<X: Context>(r: &RMatrixSpec, ctx: &X) -> Result<bool> {
    let (r1, r2) = braid_ops(&r.lift(ctx)?)?;
    Ok(r1.mul(&r2)?.mul(&r1)? == r2.mul(&r1)?.mul(&r2)?)
}

/// `(R - q)(R + q^{-1}) = 0`.
pub fn hecke_check<X: Context>(r: &RMatrixSpec, ctx: &X) -> Result<bool> {
    let op = r.lift(ctx)?;
    let q = ctx.q();
    let qi = q.inv().ok_or(Error::ZeroQ)?;
    Ok(op.add_identity(&q.neg()).mul(&op.add_identity(&qi))?.is_zero())
}

/// `R_1 F_2 F_1 = F_2 F_1 R_2` and `R_2 F_1 F_2 = F_1 F_2 R_1`.
pub fn compatible_check<X: Context>(r: &RMatrixSpec, f: &RMatrixSpec, ctx: &X) -> Result<bool> {
    if r.n() != f.n() {
        return Err(Error::Shape("R and F act on spaces of different dimension".into()));
    }
    let (r1, r2) = braid_ops(&r.lift(ctx)?)?;
    let (f1, f2) = braid_ops(&f.lift(ctx)?)?;
    let a = r1.mul(&f2)?.mul(&f1)? == f2.mul(&f1)?.mul(&r2)?;
    let b = r2.mul(&f1)?.mul(&f2)? == f1.mul(&f2)?.mul(&r1)?;
    Ok(a && b)
}

/// `R_f = F^{-1} R^{-1} F`.
pub fn twist_rf(r: &RMatrixSpec, f: &RMatrixSpec) -> Result<RMatrixSpec> {
    let fi = f.op.inverse()?;
    let ri = r.op.inverse()?;
    let op = fi.mul(&ri)?.mul(&f.op)?;
    Ok(RMatrixSpec { op, label: format!("twist({}, {})", r.label, f.label), declared_type: None })
}

/// Skew-invertibility data required of a compatible pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairHypotheses {
    pub r_strict: bool,
    pub f_strict: bool,
    pub rf_skew_invertible: bool,
}

impl PairHypotheses {
    pub fn all(&self) -> bool {
        self.r_strict && self.f_strict && self.rf_skew_invertible
    }
}

pub fn pair_hypotheses<X: Context>(r: &RMatrixSpec, f: &RMatrixSpec, ctx: &X) -> Result<PairHypotheses> {
    let strict = |s: &RMatrixSpec| -> Result<bool> {
        match d_operator(&s.lift(ctx)?) {
            Ok(d) => Ok(d.strict),
            Err(Error::NotSkewInvertible) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let rf = twist_rf(r, f)?;
    let rf_skew_invertible = match skew_inverse(&rf.lift(ctx)?) {
        Ok(_) => true,
        Err(Error::NotSkewInvertible) => false,
        Err(e) => return Err(e),
    };
    Ok(PairHypotheses { r_strict: strict(r)?, f_strict: strict(f)?, rf_skew_invertible })
}

#[derive(Serialize, Deserialize)]
struct FileEntry {
    #[serde(rename = "in")]
    input: [usize; 2],
    out: [usize; 2],
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct FileFormat {
    #[serde(rename = "N")]
    n: usize,
    entries: Vec<FileEntry>,
}

/// Reads the JSON form `{"N": .., "entries": [{"in": [i,j], "out": [k,l], "coeff": ".."}]}`
/// with 1-based indices.
pub fn from_json(text: &str, label: &str) -> Result<RMatrixSpec> {
    let file: FileFormat = serde_json::from_str(text).map_err(|e| Error::Input(format!("R-matrix file: {e}")))?;
    if file.n == 0 {
        return Err(Error::Input("N must be positive".into()));
    }
    let mut trip = Vec::new();
    for e in &file.entries {
        let idx = e.input.iter().chain(&e.out);
        if idx.clone().any(|&i| i == 0 || i > file.n) {
            return Err(Error::Input(format!("index out of 1..={} in entry {:?} -> {:?}", file.n, e.input, e.out)));
        }
        let c = parse_scalar(&e.coeff)?;
        let (i, j) = (e.input[0] - 1, e.input[1] - 1);
        let (k, l) = (e.out[0] - 1, e.out[1] - 1);
        trip.push((i * file.n + j, k * file.n + l, c));
    }
    RMatrixSpec::new(SparseOperator::from_triplets(file.n, 2, trip)?, label)
}

pub fn load_json(path: &Path) -> Result<RMatrixSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    from_json(&text, &path.display().to_string())
}

pub fn to_json(r: &RMatrixSpec) -> String {
    let n = r.n();
    let entries = r
        .op
        .triplets()
        .map(|(i, o, c)| FileEntry { input: [i / n + 1, i % n + 1], out: [o / n + 1, o % n + 1], coeff: c.to_string() })
        .collect();
    serde_json::to_string_pretty(&FileFormat { n, entries }).expect("serializable")
}

/// Outcome of checking the kernel pattern of a `GL(m|n)`-type R-matrix.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GlmnReport {
    pub m: usize,
    pub n: usize,
    pub arity: usize,
    /// Images of the rectangle units checked, each expected to vanish.
    pub rectangle_units_zero: Vec<bool>,
    /// Every other shape of the same weight with whether its unit is nonzero.
    pub other_shapes_nonzero: Vec<(String, bool)>,
    pub faithfulness: &'static str,
    pub verdict: bool,
}

/// The image of the `((n+1)^{m+1})` unit vanishes while every other shape of
/// the same weight has a nonzero unit.
pub fn glmn_type_check<X: Context>(rep: &HeckeRep<X>, m: usize, n: usize, arity_bound: usize) -> Result<GlmnReport> {
    let k = (m + 1) * (n + 1);
    if k > arity_bound {
        return Err(Error::BoundExceeded(format!("arity {k} exceeds bound {arity_bound}")));
    }
    let rect = Partition::rectangle(m + 1, n + 1);
    let rect_tabs = standard_tableaux(&rect);
    let picks = [rect_tabs.first(), rect_tabs.last()];
    let mut rectangle_units_zero = Vec::new();
    for t in picks.iter().flatten() {
        rectangle_units_zero.push(rep.diagonal_unit(t)?.is_zero());
        if rect_tabs.len() == 1 {
            break;
        }
    }
    let mut other_shapes_nonzero = Vec::new();
    for mu in Partition::all_of(k) {
        if mu == rect {
            continue;
        }
        let t = crate::tableaux::StandardTableau::row_reading(&mu);
        other_shapes_nonzero.push((mu.to_string(), !rep.diagonal_unit(&t)?.is_zero()));
    }
    let verdict = rectangle_units_zero.iter().all(|&b| b) && other_shapes_nonzero.iter().all(|x| x.1);
    Ok(GlmnReport { m, n, arity: k, rectangle_units_zero, other_shapes_nonzero, faithfulness: "assumed", verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{AtQ, Rational, Symbolic};

    fn at(n: i64, d: i64) -> AtQ {
        AtQ::new(Rational::new(n, d)).unwrap()
    }

    #[test]
    fn permutation_swaps_and_squares_to_one() {
        let p = permutation(2).unwrap();
        assert!(p.op.entry(&[0, 1], &[1, 0]).is_one());
        assert!(p.op.mul(&p.op).unwrap().is_identity());
        assert!(hecke_check(&p, &at(1, 1)).unwrap());
        assert!(!hecke_check(&p, &Symbolic).unwrap());
        assert!(yang_baxter_check(&p, &Symbolic).unwrap());
    }

    #[test]
    fn super_permutation_signs() {
        let p = super_permutation(1, 1).unwrap();
        assert_eq!(p.op.entry(&[1, 1], &[1, 1]), Scalar::from_i64(-1));
        assert!(p.op.entry(&[0, 1], &[1, 0]).is_one());
        assert_eq!(super_permutation(3, 0).unwrap().op, permutation(3).unwrap().op);
        assert!(hecke_check(&p, &at(1, 1)).unwrap());
        assert!(yang_baxter_check(&p, &Symbolic).unwrap());
    }

    #[test]
    fn dj_axioms_hold_symbolically() {
        for (m, n) in [(1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (0, 2)] {
            let r = dj_glmn(m, n).unwrap();
            assert!(yang_baxter_check(&r, &Symbolic).unwrap(), "YBE {m}|{n}");
            assert!(hecke_check(&r, &Symbolic).unwrap(), "Hecke {m}|{n}");
        }
    }

    #[test]
    fn dj_two_dimensional_block() {
        let r = dj_glmn(1, 1).unwrap();
        let lambda = Scalar::q().sub(&Scalar::q_pow(-1));
        assert_eq!(r.op.entry(&[0, 1], &[0, 1]), lambda);
        assert!(r.op.entry(&[0, 1], &[1, 0]).is_one());
        assert!(r.op.entry(&[1, 0], &[0, 1]).is_one());
        assert!(r.op.entry(&[1, 0], &[1, 0]).is_zero());
        // eigenvalues q, -q^{-1}: trace and determinant of the block
        let tr = lambda.clone();
        assert_eq!(tr, Scalar::q().add(&Scalar::q_pow(-1).neg()));
        let det = Scalar::zero().sub(&Scalar::one());
        assert_eq!(det, Scalar::q().mul(&Scalar::q_pow(-1).neg()));
    }

    #[test]
    fn dj_specializes_to_super_permutation() {
        for m in 0..=4 {
            for n in 0..=(4 - m) {
                if m + n == 0 {
                    continue;
                }
                let a = dj_glmn(m, n).unwrap().lift(&at(1, 1)).unwrap();
                let b = super_permutation(m, n).unwrap().lift(&at(1, 1)).unwrap();
                assert_eq!(a, b, "{m}|{n}");
            }
        }
    }

    #[test]
    fn broken_matrix_fails_yang_baxter() {
        let p = permutation(2).unwrap();
        let extra = SparseOperator::from_triplets(2, 2, [(0, 1, Scalar::one())]).unwrap();
        let bad = RMatrixSpec::new(p.op.add(&extra).unwrap(), "bad").unwrap();
        assert!(!yang_baxter_check(&bad, &Symbolic).unwrap());
    }

    #[test]
    fn wrong_eigenvalues_fail_hecke() {
        let p = permutation(2).unwrap();
        let two_p = RMatrixSpec::new(p.op.scale(&Scalar::from_i64(2)), "2P").unwrap();
        assert!(!hecke_check(&two_p, &at(1, 1)).unwrap());
        assert!(!hecke_check(&two_p, &Symbolic).unwrap());
    }

    #[test]
    fn compatible_pairs() {
        let r = dj_glmn(1, 1).unwrap();
        assert!(compatible_check(&r, &r, &Symbolic).unwrap());
        assert!(compatible_check(&r, &permutation(2).unwrap(), &Symbolic).unwrap());
        let r2 = dj_gl(2).unwrap();
        assert!(compatible_check(&r2, &permutation(2).unwrap(), &Symbolic).unwrap());
    }

    #[test]
    fn dj_with_squared_parameter_is_not_compatible() {
        let r = dj_glmn(1, 1).unwrap();
        let sq = r.op.map(|c| {
            // substitute q -> q^2
            let sub = |p: &crate::scalars::LaurentPoly| {
                crate::scalars::LaurentPoly::from_terms(p.terms().map(|(e, c)| (2 * e, c.clone())))
            };
            Scalar::fraction(sub(c.numer()), sub(c.denom()))
        });
        let f = RMatrixSpec::new(sq.unwrap(), "DJ(q^2)").unwrap();
        assert!(!compatible_check(&r, &f, &Symbolic).unwrap());
    }

    #[test]
    fn twist_examples() {
        let r = dj_glmn(1, 1).unwrap();
        let p = permutation(2).unwrap();
        let rf = twist_rf(&r, &p).unwrap();
        let expected = p.op.mul(&r.op.inverse().unwrap()).unwrap().mul(&p.op).unwrap();
        assert_eq!(rf.op, expected);
        assert!(yang_baxter_check(&rf, &Symbolic).unwrap());
        assert!(compatible_check(&rf, &p, &Symbolic).unwrap());
        let rr = twist_rf(&r, &r).unwrap();
        assert_eq!(rr.op, r.op.inverse().unwrap());
        assert!(compatible_check(&rr, &r, &Symbolic).unwrap());
    }

    #[test]
    fn shipped_pairs_satisfy_hypotheses() {
        for (m, n) in [(2, 0), (1, 1), (2, 1), (1, 2)] {
            let r = dj_glmn(m, n).unwrap();
            let p = permutation(m + n).unwrap();
            assert!(pair_hypotheses(&r, &r, &Symbolic).unwrap().all(), "{m}|{n} rea");
            assert!(pair_hypotheses(&r, &p, &Symbolic).unwrap().all(), "{m}|{n} rtt");
        }
    }

    #[test]
    fn dj_d_operator_traces_to_super_dimension() {
        // Two independent routes to Tr_R(Id): the D-matrix trace and a direct
        // trace of the skew-inverse over both slots.
        let r = dj_glmn(1, 1).unwrap();
        let d = d_operator(&r.op).unwrap();
        let via_d = d.d.trace();
        let psi = skew_inverse(&r.op).unwrap();
        let mut via_psi = Scalar::zero();
        for i in 0..2 {
            for b in 0..2 {
                via_psi = via_psi.add(&psi.entry(&[i, b], &[i, b]));
            }
        }
        assert_eq!(via_d, via_psi);
        assert_eq!(via_d.eval_at(&Rational::one()).unwrap(), Rational::zero());
    }

    #[test]
    fn rd_commutes_with_r() {
        for r in [dj_gl(2).unwrap(), dj_glmn(1, 1).unwrap(), dj_glmn(2, 1).unwrap(), dj_glmn(1, 2).unwrap()] {
            let d = d_operator(&r.op).unwrap().d;
            let dd = SparseOperator::identity(r.n(), 2).unwrap().mul_slot_matrix(&d, 1).unwrap().mul_slot_matrix(&d, 2).unwrap();
            assert!(r.op.commutator(&dd).unwrap().is_zero(), "{}", r.label);
        }
    }

    #[test]
    fn json_round_trip() {
        let r = dj_glmn(1, 1).unwrap();
        let text = to_json(&r);
        let back = from_json(&text, "x").unwrap();
        assert_eq!(back.op, r.op);
        assert!(matches!(from_json(r#"{"N":2,"entries":[{"in":[0,1],"out":[1,1],"coeff":"1"}]}"#, "x"), Err(Error::Input(_))));
        assert!(matches!(from_json(r#"{"N":2,"entries":[{"in":[1,1],"out":[1,1],"coeff":"q +"}]}"#, "x"), Err(Error::Syntax { .. })));
        assert!(matches!(from_json("not json", "x"), Err(Error::Input(_))));
    }
}

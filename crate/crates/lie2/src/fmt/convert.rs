//! Conversions between L2A documents and the domain objects. Every `doc_to_*`
//! validates shapes and produces the raw candidate; verification stays with
//! the callers so the CLI can report axiom failures separately from parse and
//! shape errors.

use super::l2a::{L2aDoc, MapDecl, SpaceDecl, TensorDecl};
use crate::cohomology::{admissible, component_shape, Cochain, CompKey, Rep2};
use crate::constructions::{LeibnizAlgebra, LieAlgebra, RepUTH, TwoComplex};
use crate::error::{Error, Result};
use crate::exactlin::{FinSpace, LinMap, Mat, MultiTensor, Symmetry};
use crate::lie2core::algebra::{l2_00_shape, l2_01_shape, l3_shape};
use crate::lie2core::hom::phi2_shape;
use crate::lie2core::{Hom2, Lie2Algebra, Lie2Candidate, TwoMorphism};
use crate::scalar::Scalar;

pub fn space_to_fin(decl: &SpaceDecl) -> FinSpace {
    FinSpace::new(decl.name.clone(), decl.labels.clone())
}

pub fn fin_to_space(fs: &FinSpace) -> SpaceDecl {
    SpaceDecl {
        name: fs.name().to_string(),
        labels: fs.labels().to_vec(),
    }
}

fn need_space(doc: &L2aDoc, name: &str) -> Result<FinSpace> {
    doc.space(name)
        .map(space_to_fin)
        .ok_or_else(|| Error::shape(format!("missing space `{name}`")))
}

fn decl_to_linmap(decl: &MapDecl, source: &FinSpace, target: &FinSpace) -> Result<LinMap<Scalar>> {
    let mut mat = Mat::zero(target.dim(), source.dim());
    for (t, s, v) in &decl.entries {
        let ti = target
            .label_index(t)
            .ok_or_else(|| Error::shape(format!("label `{t}` not in {target}")))?;
        let si = source
            .label_index(s)
            .ok_or_else(|| Error::shape(format!("label `{s}` not in {source}")))?;
        mat[(ti, si)] = v.clone();
    }
    LinMap::new(source.clone(), target.clone(), mat)
}

fn need_map(doc: &L2aDoc, name: &str, source: &FinSpace, target: &FinSpace) -> Result<LinMap<Scalar>> {
    let decl = doc
        .map(name)
        .ok_or_else(|| Error::shape(format!("missing map `{name}`")))?;
    if decl.source != source.name() || decl.target != target.name() {
        return Err(Error::shape(format!(
            "map `{name}` must go {} -> {}",
            source.name(),
            target.name()
        )));
    }
    decl_to_linmap(decl, source, target)
}

pub fn linmap_to_decl(name: &str, m: &LinMap<Scalar>) -> MapDecl {
    let mut entries = Vec::new();
    for j in 0..m.source.dim() {
        let col = m.apply_basis(j);
        for (i, v) in col.iter().enumerate() {
            if !crate::ring::Ring::is_zero(v) {
                entries.push((
                    m.target.label(i).to_string(),
                    m.source.label(j).to_string(),
                    v.clone(),
                ));
            }
        }
    }
    MapDecl {
        name: name.to_string(),
        source: m.source.name().to_string(),
        target: m.target.name().to_string(),
        entries,
    }
}

fn decl_to_tensor(decl: &TensorDecl, doc: &L2aDoc) -> Result<MultiTensor<Scalar>> {
    let output = need_space(doc, &decl.output)?;
    let inputs: Vec<(FinSpace, Symmetry)> = decl
        .slots
        .iter()
        .map(|(sym, sp)| Ok((need_space(doc, sp)?, *sym)))
        .collect::<Result<_>>()?;
    let mut t = MultiTensor::new(inputs.clone(), output.clone());
    for (ins, out, v) in &decl.entries {
        let idx: Vec<usize> = ins
            .iter()
            .zip(&inputs)
            .map(|(l, (sp, _))| {
                sp.label_index(l)
                    .ok_or_else(|| Error::shape(format!("label `{l}` not in {sp}")))
            })
            .collect::<Result<_>>()?;
        let oi = output
            .label_index(out)
            .ok_or_else(|| Error::shape(format!("label `{out}` not in {output}")))?;
        // accumulate so that duplicate or non-canonical entries combine
        let mut delta = crate::exactlin::mat::zero_vec::<Scalar>(output.dim());
        delta[oi] = v.clone();
        t.add_to_entry(&idx, &delta);
    }
    Ok(t)
}

fn need_tensor(
    doc: &L2aDoc,
    name: &str,
    kind: &str,
    shape: &MultiTensor<Scalar>,
) -> Result<MultiTensor<Scalar>> {
    match doc.tensor(name) {
        None => Ok(shape.clone()),
        Some(decl) => {
            if decl.kind != kind {
                return Err(Error::shape(format!(
                    "tensor `{name}` must have kind `{kind}`, got `{}`",
                    decl.kind
                )));
            }
            let t = decl_to_tensor(decl, doc)?;
            if t.inputs() != shape.inputs() || !t.output().compatible(shape.output()) {
                return Err(Error::shape(format!("tensor `{name}` has wrong signature")));
            }
            Ok(t)
        }
    }
}

pub fn tensor_to_decl(name: &str, kind: &str, t: &MultiTensor<Scalar>) -> TensorDecl {
    let mut entries = Vec::new();
    for (idx, val) in t.iter() {
        for (oi, v) in val.iter().enumerate() {
            if !crate::ring::Ring::is_zero(v) {
                entries.push((
                    idx.iter()
                        .enumerate()
                        .map(|(k, &i)| t.inputs()[k].0.label(i).to_string())
                        .collect(),
                    t.output().label(oi).to_string(),
                    v.clone(),
                ));
            }
        }
    }
    TensorDecl {
        name: name.to_string(),
        kind: kind.to_string(),
        output: t.output().name().to_string(),
        slots: t
            .inputs()
            .iter()
            .map(|(sp, sym)| (*sym, sp.name().to_string()))
            .collect(),
        entries,
    }
}

/// Lie 2-algebra files: spaces `g0`, `gm1`, map `d`, tensors `l2_00`,
/// `l2_01`, `l3` (missing tensors are zero).
pub fn doc_to_lie2(doc: &L2aDoc) -> Result<Lie2Candidate<Scalar>> {
    let g0 = need_space(doc, "g0")?;
    let gm1 = need_space(doc, "gm1")?;
    let d = need_map(doc, "d", &gm1, &g0)?;
    let l2_00 = need_tensor(doc, "l2_00", "l2_00", &l2_00_shape(&g0))?;
    let l2_01 = need_tensor(doc, "l2_01", "l2_01", &l2_01_shape(&g0, &gm1))?;
    let l3 = need_tensor(doc, "l3", "l3", &l3_shape(&g0, &gm1))?;
    Ok(Lie2Candidate {
        g0,
        gm1,
        d,
        l2_00,
        l2_01,
        l3,
    })
}

pub fn lie2_to_doc(l: &Lie2Algebra<Scalar>) -> L2aDoc {
    let mut doc = L2aDoc::default();
    // canonical file names for the spaces, keeping the original labels
    let g0 = FinSpace::new("g0", l.g0().labels().to_vec());
    let gm1 = FinSpace::new("gm1", l.gm1().labels().to_vec());
    doc.spaces.push(fin_to_space(&g0));
    doc.spaces.push(fin_to_space(&gm1));
    let d = LinMap::new(gm1.clone(), g0.clone(), l.d().mat().clone()).expect("shape");
    doc.maps.push(linmap_to_decl("d", &d));
    let relabel = |t: &MultiTensor<Scalar>| -> MultiTensor<Scalar> {
        let inputs: Vec<(FinSpace, Symmetry)> = t
            .inputs()
            .iter()
            .map(|(sp, sym)| {
                let new = if sp == l.g0() { g0.clone() } else { gm1.clone() };
                (new, *sym)
            })
            .collect();
        let output = if t.output() == l.g0() { g0.clone() } else { gm1.clone() };
        let mut out = MultiTensor::new(inputs, output);
        for (idx, val) in t.iter() {
            out.set_entry(idx, val.clone()).expect("canonical");
        }
        out
    };
    for (name, kind, t) in [
        ("l2_00", "l2_00", l.l2_00()),
        ("l2_01", "l2_01", l.l2_01()),
        ("l3", "l3", l.l3()),
    ] {
        let t = relabel(t);
        if !t.is_zero() {
            doc.tensors.push(tensor_to_decl(name, kind, &t));
        }
    }
    doc
}

/// Homomorphism files: the source under `g0/gm1` (tensors `g_l2_00`...),
/// the target under `h0/hm1` (tensors `h_l2_00`...), maps `d_g`, `d_h`,
/// `phi0`, `phi1` and tensor `phi2`.
pub fn doc_to_hom(doc: &L2aDoc) -> Result<Hom2<Scalar>> {
    let (src, tgt) = doc_to_hom_endpoints(doc)?;
    let source = src.build()?;
    let target = tgt.build()?;
    let phi0 = need_map(doc, "phi0", source.g0(), target.g0())?;
    let phi1 = need_map(doc, "phi1", source.gm1(), target.gm1())?;
    let phi2 = need_tensor(doc, "phi2", "phi2", &phi2_shape(source.g0(), target.gm1()))?;
    Hom2::new(source, target, phi0, phi1, phi2)
}

fn algebra_from_prefixed(
    doc: &L2aDoc,
    s0: &str,
    sm1: &str,
    d: &str,
    prefix: &str,
) -> Result<Lie2Candidate<Scalar>> {
    let g0 = need_space(doc, s0)?;
    let gm1 = need_space(doc, sm1)?;
    let d = need_map(doc, d, &gm1, &g0)?;
    let l2_00 = need_tensor(doc, &format!("{prefix}l2_00"), "l2_00", &l2_00_shape(&g0))?;
    let l2_01 = need_tensor(doc, &format!("{prefix}l2_01"), "l2_01", &l2_01_shape(&g0, &gm1))?;
    let l3 = need_tensor(doc, &format!("{prefix}l3"), "l3", &l3_shape(&g0, &gm1))?;
    Ok(Lie2Candidate {
        g0,
        gm1,
        d,
        l2_00,
        l2_01,
        l3,
    })
}

pub fn doc_to_hom_endpoints(doc: &L2aDoc) -> Result<(Lie2Candidate<Scalar>, Lie2Candidate<Scalar>)> {
    Ok((
        algebra_from_prefixed(doc, "g0", "gm1", "d_g", "g_")?,
        algebra_from_prefixed(doc, "h0", "hm1", "d_h", "h_")?,
    ))
}

pub fn hom_to_doc(h: &Hom2<Scalar>) -> L2aDoc {
    let mut doc = L2aDoc::default();
    let g0 = FinSpace::new("g0", h.source.g0().labels().to_vec());
    let gm1 = FinSpace::new("gm1", h.source.gm1().labels().to_vec());
    let h0 = FinSpace::new("h0", h.target.g0().labels().to_vec());
    let hm1 = FinSpace::new("hm1", h.target.gm1().labels().to_vec());
    for s in [&g0, &gm1, &h0, &hm1] {
        doc.spaces.push(fin_to_space(s));
    }
    let remap = |m: &LinMap<Scalar>, s: &FinSpace, t: &FinSpace, name: &str| -> MapDecl {
        linmap_to_decl(
            name,
            &LinMap::new(s.clone(), t.clone(), m.mat().clone()).expect("shape"),
        )
    };
    doc.maps.push(remap(h.source.d(), &gm1, &g0, "d_g"));
    doc.maps.push(remap(h.target.d(), &hm1, &h0, "d_h"));
    doc.maps.push(remap(&h.phi0, &g0, &h0, "phi0"));
    doc.maps.push(remap(&h.phi1, &gm1, &hm1, "phi1"));
    let retag = |t: &MultiTensor<Scalar>, inputs: Vec<(FinSpace, Symmetry)>, out: FinSpace| {
        let mut nt = MultiTensor::new(inputs, out);
        for (idx, val) in t.iter() {
            nt.set_entry(idx, val.clone()).expect("canonical");
        }
        nt
    };
    for (name, t, inp, out) in [
        (
            "g_l2_00",
            h.source.l2_00(),
            vec![(g0.clone(), Symmetry::Alt), (g0.clone(), Symmetry::Alt)],
            g0.clone(),
        ),
        (
            "g_l2_01",
            h.source.l2_01(),
            vec![(g0.clone(), Symmetry::Plain), (gm1.clone(), Symmetry::Plain)],
            gm1.clone(),
        ),
        (
            "g_l3",
            h.source.l3(),
            vec![
                (g0.clone(), Symmetry::Alt),
                (g0.clone(), Symmetry::Alt),
                (g0.clone(), Symmetry::Alt),
            ],
            gm1.clone(),
        ),
        (
            "h_l2_00",
            h.target.l2_00(),
            vec![(h0.clone(), Symmetry::Alt), (h0.clone(), Symmetry::Alt)],
            h0.clone(),
        ),
        (
            "h_l2_01",
            h.target.l2_01(),
            vec![(h0.clone(), Symmetry::Plain), (hm1.clone(), Symmetry::Plain)],
            hm1.clone(),
        ),
        (
            "h_l3",
            h.target.l3(),
            vec![
                (h0.clone(), Symmetry::Alt),
                (h0.clone(), Symmetry::Alt),
                (h0.clone(), Symmetry::Alt),
            ],
            hm1.clone(),
        ),
    ] {
        let t = retag(t, inp, out);
        if !t.is_zero() {
            let kind = if name.ends_with("l2_00") {
                "l2_00"
            } else if name.ends_with("l2_01") {
                "l2_01"
            } else {
                "l3"
            };
            doc.tensors.push(tensor_to_decl(name, kind, &t));
        }
    }
    let phi2 = retag(
        &h.phi2,
        vec![(g0.clone(), Symmetry::Alt), (g0.clone(), Symmetry::Alt)],
        hm1.clone(),
    );
    if !phi2.is_zero() {
        doc.tensors.push(tensor_to_decl("phi2", "phi2", &phi2));
    }
    doc
}

/// 2-morphism files: a homomorphism file with extra maps `psi0`, `psi1`,
/// `tau` and tensor `psi2`.
pub fn doc_to_2mor(doc: &L2aDoc) -> Result<TwoMorphism<Scalar>> {
    let from = doc_to_hom(doc)?;
    let psi0 = need_map(doc, "psi0", from.source.g0(), from.target.g0())?;
    let psi1 = need_map(doc, "psi1", from.source.gm1(), from.target.gm1())?;
    let psi2 = need_tensor(
        doc,
        "psi2",
        "phi2",
        &phi2_shape(from.source.g0(), from.target.gm1()),
    )?;
    let to = Hom2::new(
        from.source.clone(),
        from.target.clone(),
        psi0,
        psi1,
        psi2,
    )?;
    let tau = need_map(doc, "tau", from.source.g0(), from.target.gm1())?;
    TwoMorphism::new(from, to, tau)
}

/// Leibniz files: space `g`, tensor `bracket` of kind `leibniz`.
pub fn doc_to_leibniz(doc: &L2aDoc) -> Result<LeibnizAlgebra<Scalar>> {
    let g = need_space(doc, "g")?;
    let shape = MultiTensor::new(
        vec![(g.clone(), Symmetry::Plain), (g.clone(), Symmetry::Plain)],
        g.clone(),
    );
    let bracket = need_tensor(doc, "bracket", "leibniz", &shape)?;
    LeibnizAlgebra::new(g, bracket)
}

/// Lie algebra files: space `g`, tensor `bracket` of kind `l2_00`.
pub fn doc_to_lie_algebra(doc: &L2aDoc) -> Result<LieAlgebra<Scalar>> {
    let g = need_space(doc, "g")?;
    let shape = MultiTensor::new(
        vec![(g.clone(), Symmetry::Alt), (g.clone(), Symmetry::Alt)],
        g.clone(),
    );
    let bracket = need_tensor(doc, "bracket", "l2_00", &shape)?;
    LieAlgebra::new(g, bracket)
}

/// Representation files: a Lie 2-algebra file plus spaces `v0`, `vm1`, map
/// `partial` and action tensors `act_x_v0`, `act_x_vm1`, `act_a_v0`, `act2`.
pub fn doc_to_rep(doc: &L2aDoc) -> Result<Rep2<Scalar>> {
    let algebra = doc_to_lie2(doc)?.build()?;
    let v0 = need_space(doc, "v0")?;
    let vm1 = need_space(doc, "vm1")?;
    let partial = need_map(doc, "partial", &vm1, &v0)?;
    let complex = TwoComplex::new(v0.clone(), vm1.clone(), partial)?;
    let g0 = algebra.g0().clone();
    let gm1 = algebra.gm1().clone();
    let act_x_v0 = need_tensor(
        doc,
        "act_x_v0",
        "action",
        &MultiTensor::new(
            vec![(g0.clone(), Symmetry::Plain), (v0.clone(), Symmetry::Plain)],
            v0.clone(),
        ),
    )?;
    let act_x_vm1 = need_tensor(
        doc,
        "act_x_vm1",
        "action",
        &MultiTensor::new(
            vec![(g0.clone(), Symmetry::Plain), (vm1.clone(), Symmetry::Plain)],
            vm1.clone(),
        ),
    )?;
    let act_a_v0 = need_tensor(
        doc,
        "act_a_v0",
        "action",
        &MultiTensor::new(
            vec![(gm1.clone(), Symmetry::Plain), (v0.clone(), Symmetry::Plain)],
            vm1.clone(),
        ),
    )?;
    let act2 = need_tensor(
        doc,
        "act2",
        "action",
        &MultiTensor::new(
            vec![
                (g0.clone(), Symmetry::Alt),
                (g0.clone(), Symmetry::Alt),
                (v0.clone(), Symmetry::Plain),
            ],
            vm1.clone(),
        ),
    )?;
    Rep2::new(algebra, complex, act_x_v0, act_x_vm1, act_a_v0, act2)
}

/// Representation-up-to-homotopy files for the semidirect recipe: space `g`
/// with `bracket`, complex `v0`/`vm1`/`partial`, tensors `act_v0`, `act_vm1`,
/// `act2`.
pub fn doc_to_uth(doc: &L2aDoc) -> Result<RepUTH<Scalar>> {
    let g = doc_to_lie_algebra(doc)?;
    let v0 = need_space(doc, "v0")?;
    let vm1 = need_space(doc, "vm1")?;
    let partial = need_map(doc, "partial", &vm1, &v0)?;
    let v = TwoComplex::new(v0.clone(), vm1.clone(), partial)?;
    let gs = g.space().clone();
    let act_v0 = need_tensor(
        doc,
        "act_v0",
        "action",
        &MultiTensor::new(
            vec![(gs.clone(), Symmetry::Plain), (v0.clone(), Symmetry::Plain)],
            v0.clone(),
        ),
    )?;
    let act_vm1 = need_tensor(
        doc,
        "act_vm1",
        "action",
        &MultiTensor::new(
            vec![(gs.clone(), Symmetry::Plain), (vm1.clone(), Symmetry::Plain)],
            vm1.clone(),
        ),
    )?;
    let act2 = need_tensor(
        doc,
        "act2",
        "action",
        &MultiTensor::new(
            vec![
                (gs.clone(), Symmetry::Alt),
                (gs.clone(), Symmetry::Alt),
                (v0.clone(), Symmetry::Plain),
            ],
            vm1.clone(),
        ),
    )?;
    RepUTH::new(g, v, act_v0, act_vm1, act2)
}

/// 2-term complex files: spaces `v0`, `vm1`, map `partial`.
pub fn doc_to_complex(doc: &L2aDoc) -> Result<TwoComplex<Scalar>> {
    let v0 = need_space(doc, "v0")?;
    let vm1 = need_space(doc, "vm1")?;
    let partial = need_map(doc, "partial", &vm1, &v0)?;
    TwoComplex::new(v0, vm1, partial)
}

fn comp_key_name(key: CompKey) -> String {
    let (p, q, s) = key;
    format!("c_{p}_{q}_{}", if s == 0 { "0" } else { "m1" })
}

/// Cochain components in a file, named `c_<p>_<q>_<0|m1>` with kind
/// `cochain-component`, resolved against a representation.
pub fn doc_to_cochain(doc: &L2aDoc, rep: &Rep2<Scalar>, degree: i64) -> Result<Cochain<Scalar>> {
    let mut c = Cochain::zero(degree);
    for key in admissible(degree) {
        let name = comp_key_name(key);
        let shape = component_shape(rep, key);
        let t = need_tensor(doc, &name, "cochain-component", &shape)?;
        if !t.is_zero() {
            c.set_component(key, t)?;
        }
    }
    // reject stray cochain components of other degrees
    for t in &doc.tensors {
        if t.kind == "cochain-component" {
            let ok = admissible(degree)
                .into_iter()
                .any(|k| comp_key_name(k) == t.name);
            if !ok {
                return Err(Error::shape(format!(
                    "cochain component `{}` is not admissible in degree {degree}",
                    t.name
                )));
            }
        }
    }
    Ok(c)
}

pub fn cochain_to_doc(rep: &Rep2<Scalar>, c: &Cochain<Scalar>) -> L2aDoc {
    let mut doc = lie2_to_doc(&rep.algebra);
    // the component tensors refer to g0/gm1/v spaces; register v spaces
    let v0 = FinSpace::new("v0", rep.v0().labels().to_vec());
    let vm1 = FinSpace::new("vm1", rep.vm1().labels().to_vec());
    if rep.v0() != rep.algebra.g0() {
        doc.spaces.push(fin_to_space(&v0));
        doc.spaces.push(fin_to_space(&vm1));
    }
    doc.meta.push(("cochain_degree".into(), c.degree.to_string()));
    let g0 = FinSpace::new("g0", rep.algebra.g0().labels().to_vec());
    let gm1 = FinSpace::new("gm1", rep.algebra.gm1().labels().to_vec());
    for (key, t) in c.components() {
        // retag spaces onto the file names
        let inputs: Vec<(FinSpace, Symmetry)> = t
            .inputs()
            .iter()
            .map(|(sp, sym)| {
                let new = if sp == rep.algebra.g0() {
                    g0.clone()
                } else {
                    gm1.clone()
                };
                (new, *sym)
            })
            .collect();
        let out = if key.2 == 0 {
            if rep.v0() == rep.algebra.g0() { g0.clone() } else { v0.clone() }
        } else if rep.vm1() == rep.algebra.gm1() {
            gm1.clone()
        } else {
            vm1.clone()
        };
        let mut nt = MultiTensor::new(inputs, out);
        for (idx, val) in t.iter() {
            nt.set_entry(idx, val.clone()).expect("canonical");
        }
        doc.tensors
            .push(tensor_to_decl(&comp_key_name(*key), "cochain-component", &nt));
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lie::sl2;
    use crate::constructions::quadruple::string_killing;
    use crate::fmt::l2a::{emit, parse};

    #[test]
    fn lie2_roundtrip_through_text() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let doc = lie2_to_doc(&l);
        let text = emit(&doc);
        let doc2 = parse(&text, true).unwrap();
        assert_eq!(doc, doc2);
        let cand = doc_to_lie2(&doc2).unwrap();
        let l2 = cand.build().unwrap();
        assert_eq!(l2.l3().eval_basis(&[0, 1, 2]), l.l3().eval_basis(&[0, 1, 2]));
        // bit-exact reemission
        assert_eq!(emit(&doc2), text);
    }

    #[test]
    fn hom_roundtrip_through_text() {
        let l = string_killing(&sl2::<Scalar>()).unwrap();
        let id = Hom2::identity(&l);
        let doc = hom_to_doc(&id);
        let text = emit(&doc);
        let h = doc_to_hom(&parse(&text, true).unwrap()).unwrap();
        assert!(h.verify().passed());
    }
}

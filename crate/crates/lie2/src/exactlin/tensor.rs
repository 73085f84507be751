//! Multilinear maps with alternating / symmetric input blocks.
//!
//! Coefficients are stored only on canonical index tuples: strictly increasing
//! inside an alternating block, non-decreasing inside a symmetric block.
//! Evaluation on arbitrary tuples applies the sign and permutation rules, so
//! equality of tensors is equality of canonical tables.

use super::linmap::LinMap;
use super::mat::{vec_is_zero, zero_vec, Vector};
use super::space::FinSpace;
use crate::error::{Error, Result};
use crate::ring::Ring;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Alternating within its block.
    Alt,
    /// Symmetric within its block.
    Sym,
    /// No symmetry; a block of its own.
    Plain,
}

impl Symmetry {
    pub fn tag(self) -> &'static str {
        match self {
            Symmetry::Alt => "alt",
            Symmetry::Sym => "sym",
            Symmetry::Plain => "plain",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        match s {
            "alt" => Some(Symmetry::Alt),
            "sym" => Some(Symmetry::Sym),
            "plain" => Some(Symmetry::Plain),
            _ => None,
        }
    }
}

/// A multilinear map `inputs -> output`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiTensor<R> {
    inputs: Vec<(FinSpace, Symmetry)>,
    output: FinSpace,
    entries: BTreeMap<Vec<usize>, Vector<R>>,
}

/// Maximal runs of consecutive slots with the same space and symmetry class.
fn blocks(inputs: &[(FinSpace, Symmetry)]) -> Vec<(usize, usize, Symmetry)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < inputs.len() {
        let (space, sym) = &inputs[i];
        let mut j = i + 1;
        if *sym != Symmetry::Plain {
            while j < inputs.len() && inputs[j].1 == *sym && inputs[j].0 == *space {
                j += 1;
            }
        }
        out.push((i, j, *sym));
        i = j;
    }
    out
}

/// Sort `idx[lo..hi]` ascending, counting transpositions. Returns `None` for a
/// repeated index (only meaningful for alternating blocks).
fn sort_block(idx: &mut [usize], lo: usize, hi: usize) -> Option<bool> {
    let mut swaps = false;
    // insertion sort; block sizes are tiny
    for i in lo + 1..hi {
        let mut j = i;
        while j > lo && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            swaps = !swaps;
            j -= 1;
        }
    }
    for i in lo + 1..hi {
        if idx[i - 1] == idx[i] {
            return None;
        }
    }
    Some(swaps)
}

impl<R: Ring> MultiTensor<R> {
    pub fn new(inputs: Vec<(FinSpace, Symmetry)>, output: FinSpace) -> Self {
        MultiTensor {
            inputs,
            output,
            entries: BTreeMap::new(),
        }
    }

    pub fn inputs(&self) -> &[(FinSpace, Symmetry)] {
        &self.inputs
    }

    pub fn output(&self) -> &FinSpace {
        &self.output
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Canonical form of an index tuple: `(sign, sorted)` or `None` when a
    /// repeated index inside an alternating block kills the value.
    pub fn canonicalize(&self, idx: &[usize]) -> Option<(bool, Vec<usize>)> {
        assert_eq!(idx.len(), self.arity(), "index arity mismatch");
        for (k, &i) in idx.iter().enumerate() {
            assert!(i < self.inputs[k].0.dim(), "index out of range in slot {k}");
        }
        let mut v = idx.to_vec();
        let mut negate = false;
        for (lo, hi, sym) in blocks(&self.inputs) {
            match sym {
                Symmetry::Plain => {}
                Symmetry::Sym => {
                    sort_block(&mut v, lo, hi);
                }
                Symmetry::Alt => {
                    let swaps = sort_block(&mut v, lo, hi)?;
                    negate ^= swaps;
                }
            }
        }
        Some((negate, v))
    }

    /// All canonical tuples, in lexicographic order.
    pub fn canonical_tuples(&self) -> Vec<Vec<usize>> {
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for (lo, hi, sym) in blocks(&self.inputs) {
            let dim = self.inputs[lo].0.dim();
            let size = hi - lo;
            let block_tuples = match sym {
                Symmetry::Plain => tuples(&[dim]),
                Symmetry::Alt => increasing_tuples(dim, size, true),
                Symmetry::Sym => increasing_tuples(dim, size, false),
            };
            let mut next = Vec::new();
            for prefix in &acc {
                for bt in &block_tuples {
                    let mut t = prefix.clone();
                    t.extend_from_slice(bt);
                    next.push(t);
                }
            }
            acc = next;
        }
        acc.sort();
        acc
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector<R>)> {
        self.entries.iter()
    }

    /// Value on a basis tuple, with sign rules applied.
    pub fn eval_basis(&self, idx: &[usize]) -> Vector<R> {
        match self.canonicalize(idx) {
            None => zero_vec(self.output.dim()),
            Some((neg, key)) => match self.entries.get(&key) {
                None => zero_vec(self.output.dim()),
                Some(v) => {
                    if neg {
                        super::mat::vec_neg(v)
                    } else {
                        v.clone()
                    }
                }
            },
        }
    }

    /// Overwrite the coefficient vector at a tuple.
    pub fn set_entry(&mut self, idx: &[usize], value: Vector<R>) -> Result<()> {
        if value.len() != self.output.dim() {
            return Err(Error::shape("entry vector has wrong output dimension"));
        }
        match self.canonicalize(idx) {
            None => {
                if vec_is_zero(&value) {
                    Ok(())
                } else {
                    Err(Error::math(format!(
                        "degenerate alternating tuple {idx:?} must have zero value"
                    )))
                }
            }
            Some((neg, key)) => {
                let value = if neg { super::mat::vec_neg(&value) } else { value };
                if vec_is_zero(&value) {
                    self.entries.remove(&key);
                } else {
                    self.entries.insert(key, value);
                }
                Ok(())
            }
        }
    }

    pub fn set_coeff(&mut self, idx: &[usize], out: usize, value: R) -> Result<()> {
        let mut v = self.eval_basis(idx);
        v[out] = value;
        self.set_entry(idx, v)
    }

    pub fn add_to_entry(&mut self, idx: &[usize], delta: &[R]) {
        if vec_is_zero(delta) {
            return;
        }
        let Some((neg, key)) = self.canonicalize(idx) else {
            panic!("adding to degenerate alternating tuple {idx:?}");
        };
        let delta = if neg { super::mat::vec_neg(delta) } else { delta.to_vec() };
        let slot = self
            .entries
            .entry(key.clone())
            .or_insert_with(|| zero_vec(self.output.dim()));
        super::mat::vec_add_assign(slot, &delta);
        if vec_is_zero(slot) {
            self.entries.remove(&key);
        }
    }

    /// Full multilinear evaluation on vectors.
    pub fn eval(&self, args: &[&[R]]) -> Vector<R> {
        assert_eq!(args.len(), self.arity(), "argument arity mismatch");
        for (k, a) in args.iter().enumerate() {
            assert_eq!(a.len(), self.inputs[k].0.dim(), "argument {k} dimension mismatch");
        }
        let mut out: Vector<R> = zero_vec(self.output.dim());
        // expand over canonical entries and the permutations that reach them
        let dims: Vec<usize> = self.inputs.iter().map(|(s, _)| s.dim()).collect();
        for idx in tuples(&dims) {
            let mut coeff = R::one();
            let mut zero = false;
            for (k, &i) in idx.iter().enumerate() {
                if args[k][i].is_zero() {
                    zero = true;
                    break;
                }
                coeff = coeff.mul(&args[k][i]);
            }
            if zero {
                continue;
            }
            let val = self.eval_basis(&idx);
            if vec_is_zero(&val) {
                continue;
            }
            for (o, v) in val.iter().enumerate() {
                out[o].add_assign(&coeff.mul(v));
            }
        }
        out
    }

    /// Fix the arguments in `fixed` (slot index, vector) and return the tensor
    /// in the remaining slots.
    pub fn contract(&self, fixed: &[(usize, &[R])]) -> MultiTensor<R> {
        let fixed_slots: Vec<usize> = fixed.iter().map(|(s, _)| *s).collect();
        let remaining: Vec<usize> = (0..self.arity()).filter(|s| !fixed_slots.contains(s)).collect();
        let new_inputs: Vec<(FinSpace, Symmetry)> =
            remaining.iter().map(|&s| self.inputs[s].clone()).collect();
        let mut out = MultiTensor::new(new_inputs, self.output.clone());
        let rem_dims: Vec<usize> = remaining.iter().map(|&s| self.inputs[s].0.dim()).collect();
        for key in out.canonical_tuples() {
            // value at canonical remaining tuple = sum over fixed-slot indices
            let mut args: Vec<Vector<R>> = Vec::with_capacity(self.arity());
            for slot in 0..self.arity() {
                if let Some(pos) = fixed_slots.iter().position(|&s| s == slot) {
                    args.push(fixed[pos].1.to_vec());
                } else {
                    let pos = remaining.iter().position(|&s| s == slot).unwrap();
                    args.push(super::mat::unit_vec(self.inputs[slot].0.dim(), key[pos]));
                }
            }
            let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
            let val = self.eval(&refs);
            out.set_entry(&key, val).expect("canonical tuple");
        }
        let _ = rem_dims;
        out
    }

    /// An arity-1 tensor as a linear map.
    pub fn to_linmap(&self) -> Result<LinMap<R>> {
        if self.arity() != 1 {
            return Err(Error::shape(format!("arity {} tensor is not a map", self.arity())));
        }
        LinMap::from_images(
            self.inputs[0].0.clone(),
            self.output.clone(),
            (0..self.inputs[0].0.dim())
                .map(|i| self.eval_basis(&[i]))
                .collect(),
        )
    }

    /// View a linear map as an arity-1 tensor.
    pub fn from_linmap(map: &LinMap<R>) -> MultiTensor<R> {
        let mut t = MultiTensor::new(
            vec![(map.source.clone(), Symmetry::Plain)],
            map.target.clone(),
        );
        for j in 0..map.source.dim() {
            t.set_entry(&[j], map.apply_basis(j)).expect("plain tuple");
        }
        t
    }

    pub fn add(&self, rhs: &MultiTensor<R>) -> MultiTensor<R> {
        assert_eq!(self.inputs, rhs.inputs, "tensor input mismatch");
        assert!(self.output.compatible(&rhs.output), "tensor output mismatch");
        let mut out = self.clone();
        for (k, v) in rhs.entries.iter() {
            out.add_to_entry(k, v);
        }
        out
    }

    pub fn sub(&self, rhs: &MultiTensor<R>) -> MultiTensor<R> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiTensor<R> {
        self.scale(&R::one().neg())
    }

    pub fn scale(&self, c: &R) -> MultiTensor<R> {
        let mut out = MultiTensor::new(self.inputs.clone(), self.output.clone());
        if c.is_zero() {
            return out;
        }
        for (k, v) in self.entries.iter() {
            out.entries.insert(k.clone(), super::mat::vec_scale(c, v));
        }
        out
    }

    /// Post-compose with a linear map on the output.
    pub fn postcompose(&self, map: &LinMap<R>) -> Result<MultiTensor<R>> {
        if !map.source.compatible(&self.output) {
            return Err(Error::shape("postcompose: output space mismatch"));
        }
        let mut out = MultiTensor::new(self.inputs.clone(), map.target.clone());
        for (k, v) in self.entries.iter() {
            let w = map.apply(v);
            if !vec_is_zero(&w) {
                out.entries.insert(k.clone(), w);
            }
        }
        Ok(out)
    }

    /// Pre-compose slot `k` with `maps[k]`. All slots of one symmetric or
    /// alternating block must receive the same map for the block structure to
    /// survive; that is the caller's contract.
    pub fn precompose(&self, maps: &[&LinMap<R>]) -> Result<MultiTensor<R>> {
        if maps.len() != self.arity() {
            return Err(Error::shape("precompose: wrong number of maps"));
        }
        for (k, m) in maps.iter().enumerate() {
            if !m.target.compatible(&self.inputs[k].0) {
                return Err(Error::shape(format!("precompose: slot {k} space mismatch")));
            }
        }
        let new_inputs: Vec<(FinSpace, Symmetry)> = maps
            .iter()
            .zip(&self.inputs)
            .map(|(m, (_, sym))| (m.source.clone(), *sym))
            .collect();
        let mut out = MultiTensor::new(new_inputs, self.output.clone());
        for key in out.canonical_tuples() {
            let args: Vec<Vector<R>> = key
                .iter()
                .enumerate()
                .map(|(k, &j)| maps[k].apply_basis(j))
                .collect();
            let refs: Vec<&[R]> = args.iter().map(|v| v.as_slice()).collect();
            out.set_entry(&key, self.eval(&refs)).expect("canonical tuple");
        }
        Ok(out)
    }

    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiTensor<S> {
        let mut out = MultiTensor::new(self.inputs.clone(), self.output.clone());
        for (k, v) in self.entries.iter() {
            let w: Vector<S> = v.iter().map(&f).collect();
            if !vec_is_zero(&w) {
                out.entries.insert(k.clone(), w);
            }
        }
        out
    }
}

/// All index tuples with `idx[k] < dims[k]`, lexicographic.
pub fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut acc = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::with_capacity(acc.len() * d);
        for t in &acc {
            for i in 0..d {
                let mut s = t.clone();
                s.push(i);
                next.push(s);
            }
        }
        acc = next;
    }
    acc
}

/// Sorted `size`-tuples from `0..dim`; strictly increasing when `strict`.
pub fn increasing_tuples(dim: usize, size: usize, strict: bool) -> Vec<Vec<usize>> {
    fn rec(dim: usize, size: usize, strict: bool, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, size, strict, if strict { i + 1 } else { i }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, size, strict, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    fn g3() -> FinSpace {
        FinSpace::new("g", vec!["e".into(), "f".into(), "h".into()])
    }

    #[test]
    fn alternating_sign_rules() {
        let g = g3();
        let mut t = MultiTensor::new(
            vec![(g.clone(), Symmetry::Alt), (g.clone(), Symmetry::Alt)],
            g.clone(),
        );
        t.set_coeff(&[0, 1], 2, q(5)).unwrap();
        assert_eq!(t.eval_basis(&[1, 0])[2], q(-5));
        assert!(vec_is_zero(&t.eval_basis(&[1, 1])));
        // setting via the swapped tuple stores the sign-adjusted value
        t.set_coeff(&[2, 0], 1, q(3)).unwrap();
        assert_eq!(t.eval_basis(&[0, 2])[1], q(-3));
    }

    #[test]
    fn symmetric_block_is_invariant() {
        let g = g3();
        let mut t = MultiTensor::new(
            vec![(g.clone(), Symmetry::Sym), (g.clone(), Symmetry::Sym)],
            g.clone(),
        );
        t.set_coeff(&[1, 2], 0, q(7)).unwrap();
        assert_eq!(t.eval_basis(&[2, 1])[0], q(7));
        assert_eq!(t.eval_basis(&[1, 2])[0], q(7));
    }

    #[test]
    fn eval_is_multilinear() {
        let g = g3();
        let mut t = MultiTensor::new(
            vec![(g.clone(), Symmetry::Alt), (g.clone(), Symmetry::Alt)],
            g.clone(),
        );
        t.set_coeff(&[0, 1], 2, q(1)).unwrap();
        t.set_coeff(&[0, 2], 0, q(2)).unwrap();
        let x = vec![q(1), q(2), q(0)];
        let y = vec![q(0), q(1), q(3)];
        let lhs = t.eval(&[&x, &y]);
        // bilinearity against a hand expansion
        let mut expect = zero_vec::<Scalar>(3);
        for i in 0..3 {
            for j in 0..3 {
                let c = x[i].mul(&y[j]);
                let basis = t.eval_basis(&[i, j]);
                for o in 0..3 {
                    expect[o].add_assign(&c.mul(&basis[o]));
                }
            }
        }
        assert_eq!(lhs, expect);
        // antisymmetry of evaluation
        let swapped = t.eval(&[&y, &x]);
        assert_eq!(swapped, super::super::mat::vec_neg(&lhs));
    }

    #[test]
    fn canonical_tuples_counts() {
        let g = g3();
        let t = MultiTensor::<Scalar>::new(
            vec![
                (g.clone(), Symmetry::Alt),
                (g.clone(), Symmetry::Alt),
                (g.clone(), Symmetry::Alt),
            ],
            g.clone(),
        );
        assert_eq!(t.canonical_tuples(), vec![vec![0, 1, 2]]);
        let s = MultiTensor::<Scalar>::new(
            vec![(g.clone(), Symmetry::Sym), (g.clone(), Symmetry::Sym)],
            g.clone(),
        );
        assert_eq!(s.canonical_tuples().len(), 6);
    }

    #[test]
    fn contract_keeps_block_structure() {
        let g = g3();
        let mut t = MultiTensor::new(
            vec![
                (g.clone(), Symmetry::Alt),
                (g.clone(), Symmetry::Alt),
                (g.clone(), Symmetry::Alt),
            ],
            g.clone(),
        );
        t.set_coeff(&[0, 1, 2], 0, q(1)).unwrap();
        let x = vec![q(1), q(0), q(0)];
        let fixed = t.contract(&[(0, x.as_slice())]);
        assert_eq!(fixed.arity(), 2);
        assert_eq!(fixed.eval_basis(&[1, 2])[0], q(1));
        assert_eq!(fixed.eval_basis(&[2, 1])[0], q(-1));
        assert!(vec_is_zero(&fixed.eval_basis(&[0, 1])));
    }
}

//! Dense rank-3 tensors and an index-label contraction engine.
//!
//! [`contract`] takes an einsum-style plan such as `"ai,bj,abk->ijk"` and
//! evaluates the full nested-loop sum exactly. It is deliberately naive:
//! every structure in this crate lives at dimension ≤ 64, usually ≤ 10.

use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Dense `d0 × d1 × d2` grid indexed `(i, j, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            dims: [d0, d1, d2],
            data: vec![Rational::zero(); d0 * d1 * d2],
        }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut t = Self::zeros(dims[0], dims[1], dims[2]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    t[(i, j, k)] = f(i, j, k);
                }
            }
        }
        t
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn is_cubic(&self) -> bool {
        self.dims[0] == self.dims[1] && self.dims[1] == self.dims[2]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// The fibre `(i, j, ·)` as a vector.
    pub fn fibre(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dims[2]).map(|k| self[(i, j, k)].clone()).collect()
    }

    /// Lexicographically first nonzero index, if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize)> {
        let pos = self.data.iter().position(|x| !x.is_zero())?;
        let [_, d1, d2] = self.dims;
        Some((pos / (d1 * d2), (pos / d2) % d1, pos % d2))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        (i * self.dims[1] + j) * self.dims[2] + k
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Rational;

    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Rational {
        &self.data[self.offset(i, j, k)]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Rational {
        let o = self.offset(i, j, k);
        &mut self.data[o]
    }
}

/// Dense array of any rank, row-major. Rank 0 holds a single scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Array {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl Array {
    pub fn zeros(shape: &[usize]) -> Self {
        Array {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); shape.iter().product()],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<Rational>) -> Result<Self> {
        if shape.iter().product::<usize>() != data.len() {
            return Err(Error::shape("array data length does not match shape"));
        }
        Ok(Array {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn vector(v: &[Rational]) -> Self {
        Array {
            shape: vec![v.len()],
            data: v.to_vec(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }

    /// Lexicographically first nonzero multi-index.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        let mut pos = self.data.iter().position(|x| !x.is_zero())?;
        let mut idx = vec![0; self.shape.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.shape).rev() {
            *slot = pos % d;
            pos /= d;
        }
        Some(idx)
    }

    pub fn scalar_value(&self) -> Option<&Rational> {
        (self.shape.is_empty()).then(|| &self.data[0])
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index rank mismatch");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }
}

impl std::ops::Sub for &Array {
    type Output = Array;

    fn sub(self, rhs: &Array) -> Array {
        assert_eq!(self.shape, rhs.shape);
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Add for &Array {
    type Output = Array;

    fn add(self, rhs: &Array) -> Array {
        assert_eq!(self.shape, rhs.shape);
        Array {
            shape: self.shape.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl From<&Matrix> for Array {
    fn from(m: &Matrix) -> Self {
        Array {
            shape: vec![m.rows(), m.cols()],
            data: m.entries().to_vec(),
        }
    }
}

impl From<&Tensor3> for Array {
    fn from(t: &Tensor3) -> Self {
        Array {
            shape: t.dims.to_vec(),
            data: t.data.clone(),
        }
    }
}

impl TryFrom<Array> for Tensor3 {
    type Error = Error;

    fn try_from(a: Array) -> Result<Self> {
        let dims: [usize; 3] = a
            .shape
            .as_slice()
            .try_into()
            .map_err(|_| Error::shape(format!("expected rank 3, got rank {}", a.rank())))?;
        Ok(Tensor3 { dims, data: a.data })
    }
}

impl TryFrom<Array> for Matrix {
    type Error = Error;

    fn try_from(a: Array) -> Result<Self> {
        if a.rank() != 2 {
            return Err(Error::shape(format!("expected rank 2, got rank {}", a.rank())));
        }
        let (r, c) = (a.shape[0], a.shape[1]);
        Ok(Matrix::from_fn(r, c, |i, j| a.data[i * c + j].clone()))
    }
}

struct Plan {
    inputs: Vec<Vec<u8>>,
    output: Vec<u8>,
    summed: Vec<u8>,
}

fn parse_plan(spec: &str, n_operands: usize) -> Result<Plan> {
    let (lhs, rhs) = spec
        .split_once("->")
        .ok_or_else(|| Error::shape(format!("contraction plan `{spec}` lacks `->`")))?;
    let inputs: Vec<Vec<u8>> = lhs.split(',').map(|s| s.trim().bytes().collect()).collect();
    if inputs.len() != n_operands {
        return Err(Error::shape(format!(
            "plan names {} operands, {} supplied",
            inputs.len(),
            n_operands
        )));
    }
    let output: Vec<u8> = rhs.trim().bytes().collect();
    let all_labels = |l: &u8| l.is_ascii_alphabetic();
    if !inputs.iter().flatten().all(all_labels) || !output.iter().all(all_labels) {
        return Err(Error::shape("plan labels must be ASCII letters"));
    }
    for (i, &l) in output.iter().enumerate() {
        if output[..i].contains(&l) {
            return Err(Error::shape(format!("repeated output label `{}`", l as char)));
        }
        if !inputs.iter().any(|inp| inp.contains(&l)) {
            return Err(Error::shape(format!("output label `{}` unbound", l as char)));
        }
    }
    let mut summed = Vec::new();
    for &l in inputs.iter().flatten() {
        if !output.contains(&l) && !summed.contains(&l) {
            summed.push(l);
        }
    }
    Ok(Plan { inputs, output, summed })
}

/// Evaluates an einsum-style contraction exactly.
///
/// Every label appearing in an input but not in the output is summed over.
/// The result equals the naive nested-loop sum.
pub fn contract(spec: &str, operands: &[&Array]) -> Result<Array> {
    let plan = parse_plan(spec, operands.len())?;

    let mut size = [0usize; 256];
    let mut bound = [false; 256];
    for (labels, op) in plan.inputs.iter().zip(operands) {
        if labels.len() != op.rank() {
            return Err(Error::shape(format!(
                "operand of rank {} given {} labels",
                op.rank(),
                labels.len()
            )));
        }
        for (&l, &d) in labels.iter().zip(op.shape()) {
            let slot = l as usize;
            if bound[slot] && size[slot] != d {
                return Err(Error::shape(format!(
                    "label `{}` bound to sizes {} and {}",
                    l as char, size[slot], d
                )));
            }
            bound[slot] = true;
            size[slot] = d;
        }
    }

    // Loop order: output labels, then summed labels.
    let order: Vec<u8> = plan.output.iter().chain(&plan.summed).copied().collect();
    let dims: Vec<usize> = order.iter().map(|&l| size[l as usize]).collect();
    let strides: Vec<Vec<usize>> = plan
        .inputs
        .iter()
        .zip(operands)
        .map(|(labels, op)| {
            let mut per_label = vec![0usize; order.len()];
            let mut stride = 1;
            for (pos, &l) in labels.iter().enumerate().rev() {
                let slot = order.iter().position(|&o| o == l).unwrap();
                per_label[slot] += stride;
                stride *= op.shape()[pos];
            }
            per_label
        })
        .collect();

    let out_shape: Vec<usize> = plan.output.iter().map(|&l| size[l as usize]).collect();
    let mut out = Array::zeros(&out_shape);
    if dims.contains(&0) {
        return Ok(out);
    }
    let n_out = plan.output.len();
    let inner: usize = dims[n_out..].iter().product();

    let mut counter = vec![0usize; order.len()];
    for out_slot in 0..out.data.len() {
        let mut acc = Rational::zero();
        for _ in 0..inner {
            let mut term: Option<Rational> = None;
            let mut vanished = false;
            for (op, st) in operands.iter().zip(&strides) {
                let off: usize = counter.iter().zip(st).map(|(c, s)| c * s).sum();
                let v = &op.data[off];
                if v.is_zero() {
                    vanished = true;
                    break;
                }
                term = Some(match term {
                    None => v.clone(),
                    Some(t) => t * v,
                });
            }
            if !vanished {
                if let Some(t) = term {
                    acc += t;
                }
            }
            advance(&mut counter[n_out..], &dims[n_out..]);
        }
        out.data[out_slot] = acc;
        advance(&mut counter[..n_out], &dims[..n_out]);
    }
    Ok(out)
}

fn advance(counter: &mut [usize], dims: &[usize]) {
    for (c, &d) in counter.iter_mut().zip(dims).rev() {
        *c += 1;
        if *c < d {
            return;
        }
        *c = 0;
    }
}

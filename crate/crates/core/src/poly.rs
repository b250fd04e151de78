//! Dense univariate polynomials over a fixed F_q: arithmetic, composition,
//! iteration, and exact irreducibility testing.
//!
//! Irreducibility uses the distinct-degree criterion: f of degree n is
//! irreducible over F_q iff x^(q^n) = x mod f and gcd(x^(q^(n/t)) - x, f)
//! is constant for every prime t | n. Frobenius powers x^(q^k) mod f are
//! built by modular composition (Brent-Kung) on top of Karatsuba
//! multiplication and Newton-inverse reduction, which keeps the
//! degree-4096 instances of the verification sweep fast.

use std::fmt;

use crate::arith::distinct_prime_factors;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, KernelKind};

/// Default bound on iterate degrees; `iterate` refuses to build beyond it.
pub const DEFAULT_DEGREE_CAP: usize = 4096;

/// Run `$body` with `$k` bound to the field's coefficient kernel. Each arm
/// monomorphizes the polynomial algorithms for its backend.
macro_rules! dispatch {
    ($field:expr, $k:ident, $body:expr) => {{
        let field = $field;
        match field.kernel() {
            KernelKind::Prime(p) => {
                let $k = PrimeKern { p };
                $body
            }
            KernelKind::Table { p, q, mul, add, neg } => {
                let $k = TableKern { p, q, mul, add, neg };
                $body
            }
            KernelKind::Generic => {
                let $k = GenericKern { field };
                $body
            }
        }
    }};
}

/// Dense polynomial; `coeffs` ascending with nonzero leading coefficient,
/// empty for the zero polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    pub fn x(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    /// x^d - a, the binomial under study.
    pub fn binomial(d: u64, a: &FieldElement) -> Poly {
        let field = a.field().clone();
        let mut coeffs = vec![0u64; d as usize + 1];
        coeffs[0] = field.neg_code(a.code());
        coeffs[d as usize] = 1;
        Poly { field, coeffs }.normalized()
    }

    pub fn from_elements(field: &Field, coeffs: &[FieldElement]) -> Result<Poly> {
        let mut codes = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            codes.push(c.code());
        }
        Ok(Poly { field: field.clone(), coeffs: codes }.normalized())
    }

    /// Builds from canonical element codes, ascending.
    pub fn from_codes(field: &Field, codes: &[u64]) -> Result<Poly> {
        for &c in codes {
            if c >= field.q() {
                return Err(Error::ElementRange { code: c, q: field.q() });
            }
        }
        Ok(Poly { field: field.clone(), coeffs: codes.to_vec() }.normalized())
    }

    /// Accepts "x^4+4*x^2+1" (integer coefficients) or the ascending
    /// coefficient list "1,0,4,0,1".
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.contains('x') || s.contains('X') {
            parse_terms(field, s)
        } else {
            let mut codes = Vec::new();
            for part in s.split(',') {
                let n: i64 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {part:?}")))?;
                codes.push(field.from_int(n).code());
            }
            Ok(Poly { field: field.clone(), coeffs: codes }.normalized())
        }
    }

    fn normalized(mut self) -> Poly {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        let code = self.coeffs.get(i).copied().unwrap_or(0);
        self.field.element(code).unwrap()
    }

    #[cfg(test)]
    pub(crate) fn codes_ref(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        assert!(at.field() == &self.field, "evaluation point from a different field");
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add_code(self.field.mul_code(acc, at.code()), c);
        }
        self.field.element(acc).unwrap()
    }

    fn check_same_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.add_code(a, b);
        }
        Ok(Poly { field: self.field.clone(), coeffs: out }.normalized())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.field.sub_code(a, b);
        }
        Ok(Poly { field: self.field.clone(), coeffs: out }.normalized())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let coeffs = dispatch!(&self.field, k, mul_codes(k, &self.coeffs, &other.coeffs));
        Ok(Poly { field: self.field.clone(), coeffs }.normalized())
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|&x| self.field.mul_code(x, c.code())).collect();
        Poly { field: self.field.clone(), coeffs }.normalized()
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroElement);
        }
        let (q, r) =
            dispatch!(&self.field, k, div_rem_codes(k, self.coeffs.clone(), &divisor.coeffs));
        Ok((
            Poly { field: self.field.clone(), coeffs: q }.normalized(),
            Poly { field: self.field.clone(), coeffs: r }.normalized(),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_same_field(other)?;
        let codes = dispatch!(&self.field, k, gcd_codes(k, &self.coeffs, &other.coeffs));
        Ok(Poly { field: self.field.clone(), coeffs: codes }.normalized())
    }

    pub fn make_monic(&self) -> Poly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&lc) => {
                let inv = self.field.inv_code(lc).unwrap();
                let coeffs = self.coeffs.iter().map(|&c| self.field.mul_code(c, inv)).collect();
                Poly { field: self.field.clone(), coeffs }
            }
        }
    }

    /// f(g(x)). Degree multiplies for nonconstant operands.
    pub fn compose(&self, g: &Poly) -> Result<Poly> {
        self.check_same_field(g)?;
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g)?;
            if c != 0 {
                if acc.coeffs.is_empty() {
                    acc.coeffs.push(c);
                } else {
                    acc.coeffs[0] = self.field.add_code(acc.coeffs[0], c);
                }
            }
        }
        Ok(acc.normalized())
    }

    /// n-th iterate under self-composition; the first iterate is the
    /// polynomial itself. Refuses degrees beyond the cap.
    pub fn iterate(&self, n: u32) -> Result<Poly> {
        self.iterate_with_cap(n, DEFAULT_DEGREE_CAP)
    }

    pub fn iterate_with_cap(&self, n: u32, cap: usize) -> Result<Poly> {
        if n == 0 {
            return Ok(Poly::x(&self.field));
        }
        let d = self.degree().filter(|&d| d >= 1).ok_or(Error::DegreeTooSmall(0))? as u128;
        let target = d
            .checked_pow(n)
            .filter(|&t| t <= cap as u128)
            .ok_or(Error::DegreeCapExceeded { degree: d.saturating_pow(n), cap })?;
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.compose(self)?;
        }
        debug_assert_eq!(acc.degree(), Some(target as usize));
        Ok(acc)
    }

    /// Exact irreducibility over the coefficient field. Constants and the
    /// zero polynomial are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => {
                let monic = self.make_monic();
                dispatch!(&self.field, k, rabin_irreducible(k, &self.field, &monic.coeffs))
            }
        }
    }

    /// The residue of x^(q^k) modulo self.
    pub fn frobenius_power(&self, k: u64) -> Result<Poly> {
        if self.degree().unwrap_or(0) < 1 {
            return Err(Error::DegreeTooSmall(0));
        }
        let monic = self.make_monic();
        let codes = dispatch!(&self.field, kern, {
            let ctx = ModCtx::new(kern, &monic.coeffs);
            let mut chain = FrobeniusChain::new(kern, &ctx, self.field.q());
            chain.get(kern, &ctx, k)
        });
        Ok(Poly { field: self.field.clone(), coeffs: codes }.normalized())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let ce = self.field.element(c).unwrap();
            match (i, c) {
                (0, _) => write!(f, "{ce}")?,
                (_, 1) => {}
                _ => write!(f, "{ce}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

fn parse_terms(field: &Field, s: &str) -> Result<Poly> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<(i64, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1i64;
    let mut chars = cleaned.chars().peekable();
    match chars.peek() {
        Some('-') => {
            sign = -1;
            chars.next();
        }
        Some('+') => {
            chars.next();
        }
        _ => {}
    }
    for ch in chars {
        match ch {
            '+' => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = 1;
            }
            '-' => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = -1;
            }
            _ => cur.push(ch),
        }
    }
    terms.push((sign, cur));

    let mut coeffs: Vec<u64> = Vec::new();
    for (sign, term) in terms {
        if term.is_empty() {
            return Err(Error::Parse("dangling sign in polynomial".into()));
        }
        let term = term.replace('X', "x");
        let (coef_str, exp) = match term.find('x') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let coef = term[..pos].trim_end_matches('*');
                let rest = &term[pos + 1..];
                let exp = if rest.is_empty() {
                    1
                } else {
                    let e = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                };
                (coef, exp)
            }
        };
        let coef: i64 = if coef_str.is_empty() {
            1
        } else {
            coef_str.parse().map_err(|_| Error::Parse(format!("bad coefficient {coef_str:?}")))?
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        let contribution = field.from_int(sign * coef).code();
        coeffs[exp] = field.add_code(coeffs[exp], contribution);
    }
    Ok(Poly { field: field.clone(), coeffs }.normalized())
}

// ----- coefficient kernels -------------------------------------------------
//
// The same algorithms run over three coefficient backends: prime residues
// (delayed reduction), dense lookup tables (small extension fields), and a
// generic decode path. Dispatch happens once per public entry point.

pub(crate) trait Kern: Copy {
    fn characteristic(self) -> u64;
    fn add(self, a: u64, b: u64) -> u64;
    fn sub(self, a: u64, b: u64) -> u64;
    fn mul(self, a: u64, b: u64) -> u64;
    fn inv(self, a: u64) -> u64;
    /// out[i+j] += a[i] * b[j], everything reduced.
    fn schoolbook_into(self, out: &mut [u64], a: &[u64], b: &[u64]);
    /// out[i] += c * a[i]
    fn scale_add_into(self, out: &mut [u64], a: &[u64], c: u64);
    /// Accumulating variant for inner loops that tolerate unreduced
    /// values until `finalize_acc`; the default reduces eagerly.
    fn scale_add_acc(self, acc: &mut [u64], a: &[u64], c: u64) {
        self.scale_add_into(acc, a, c);
    }
    fn finalize_acc(self, _acc: &mut [u64]) {}
    /// Leaf size below which schoolbook multiplication wins.
    fn leaf(self) -> usize;
}

#[derive(Clone, Copy)]
struct PrimeKern {
    p: u64,
}

impl Kern for PrimeKern {
    #[inline]
    fn characteristic(self) -> u64 {
        self.p
    }
    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    fn inv(self, a: u64) -> u64 {
        crate::arith::mod_pow(a, self.p - 2, self.p)
    }
    fn schoolbook_into(self, out: &mut [u64], a: &[u64], b: &[u64]) {
        // Delayed reduction: p < 2^20, and the shorter operand has at most
        // `leaf` entries, so raw sums stay far below 2^63.
        let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut raw = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in short.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in long.iter().enumerate() {
                raw[i + j] += ai * bj;
            }
        }
        for (slot, r) in out.iter_mut().zip(raw) {
            *slot = self.add(*slot, r % self.p);
        }
    }
    fn scale_add_into(self, out: &mut [u64], a: &[u64], c: u64) {
        if c == 0 {
            return;
        }
        for (slot, &ai) in out.iter_mut().zip(a) {
            *slot = self.add(*slot, ai * c % self.p);
        }
    }
    fn scale_add_acc(self, acc: &mut [u64], a: &[u64], c: u64) {
        // raw accumulation; p < 2^20 keeps sqrt(n) such sums below 2^63
        if c == 0 {
            return;
        }
        for (slot, &ai) in acc.iter_mut().zip(a) {
            *slot += ai * c;
        }
    }
    fn finalize_acc(self, acc: &mut [u64]) {
        for slot in acc.iter_mut() {
            *slot %= self.p;
        }
    }
    fn leaf(self) -> usize {
        32
    }
}

#[derive(Clone, Copy)]
struct TableKern<'a> {
    p: u64,
    q: usize,
    mul: &'a [u16],
    add: &'a [u16],
    neg: &'a [u16],
}

impl<'a> Kern for TableKern<'a> {
    #[inline]
    fn characteristic(self) -> u64 {
        self.p
    }
    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        self.add[a as usize * self.q + b as usize] as u64
    }
    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg[b as usize] as u64)
    }
    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        self.mul[a as usize * self.q + b as usize] as u64
    }
    fn inv(self, a: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        let mut exp = self.q as u64 - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
    fn schoolbook_into(self, out: &mut [u64], a: &[u64], b: &[u64]) {
        let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        for (i, &ai) in short.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.mul[ai as usize * self.q..(ai as usize + 1) * self.q];
            for (j, &bj) in long.iter().enumerate() {
                let prod = row[bj as usize] as u64;
                out[i + j] = self.add(out[i + j], prod);
            }
        }
    }
    fn scale_add_into(self, out: &mut [u64], a: &[u64], c: u64) {
        if c == 0 {
            return;
        }
        let row = &self.mul[c as usize * self.q..(c as usize + 1) * self.q];
        for (slot, &ai) in out.iter_mut().zip(a) {
            *slot = self.add(*slot, row[ai as usize] as u64);
        }
    }
    fn leaf(self) -> usize {
        16
    }
}

#[derive(Clone, Copy)]
struct GenericKern<'a> {
    field: &'a Field,
}

impl<'a> Kern for GenericKern<'a> {
    fn characteristic(self) -> u64 {
        self.field.p()
    }
    fn add(self, a: u64, b: u64) -> u64 {
        self.field.add_code(a, b)
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        self.field.sub_code(a, b)
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        self.field.mul_code(a, b)
    }
    fn inv(self, a: u64) -> u64 {
        self.field.inv_code(a).expect("inverse of zero")
    }
    fn schoolbook_into(self, out: &mut [u64], a: &[u64], b: &[u64]) {
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    out[i + j] = self.add(out[i + j], self.mul(ai, bj));
                }
            }
        }
    }
    fn scale_add_into(self, out: &mut [u64], a: &[u64], c: u64) {
        if c == 0 {
            return;
        }
        for (slot, &ai) in out.iter_mut().zip(a) {
            *slot = self.add(*slot, self.mul(ai, c));
        }
    }
    fn leaf(self) -> usize {
        8
    }
}

// ----- multiplication ------------------------------------------------------

fn nonzero_count(v: &[u64], limit: usize) -> usize {
    let mut n = 0;
    for &c in v {
        if c != 0 {
            n += 1;
            if n > limit {
                break;
            }
        }
    }
    n
}

pub(crate) fn mul_codes<K: Kern>(k: K, a: &[u64], b: &[u64]) -> Vec<u64> {
    debug_assert!(!a.is_empty() && !b.is_empty());
    let mut out = vec![0u64; a.len() + b.len() - 1];
    // Sparse operands (binomials during iteration) skip Karatsuba.
    if nonzero_count(a, 8) <= 8 || nonzero_count(b, 8) <= 8 || a.len().min(b.len()) <= k.leaf() {
        k.schoolbook_into(&mut out, a, b);
        return out;
    }
    kara_into(k, &mut out, a, b);
    out
}

/// out += a * b by recursive Karatsuba.
fn kara_into<K: Kern>(k: K, out: &mut [u64], a: &[u64], b: &[u64]) {
    debug_assert_eq!(out.len(), a.len() + b.len() - 1);
    if a.len().min(b.len()) <= k.leaf() {
        k.schoolbook_into(out, a, b);
        return;
    }
    let m = a.len().max(b.len()).div_ceil(2);
    if a.len() <= m {
        // only b splits
        let (b0, b1) = b.split_at(m);
        kara_into(k, &mut out[..a.len() + m - 1], a, b0);
        kara_into(k, &mut out[m..], a, b1);
        return;
    }
    if b.len() <= m {
        let (a0, a1) = a.split_at(m);
        kara_into(k, &mut out[..m + b.len() - 1], a0, b);
        kara_into(k, &mut out[m..], a1, b);
        return;
    }
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let mut z0 = vec![0u64; a0.len() + b0.len() - 1];
    kara_into(k, &mut z0, a0, b0);
    let mut z2 = vec![0u64; a1.len() + b1.len() - 1];
    kara_into(k, &mut z2, a1, b1);
    let sa = padded_add(k, a0, a1);
    let sb = padded_add(k, b0, b1);
    let mut z1 = vec![0u64; sa.len() + sb.len() - 1];
    kara_into(k, &mut z1, &sa, &sb);
    for (i, &c) in z0.iter().enumerate() {
        z1[i] = k.sub(z1[i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        z1[i] = k.sub(z1[i], c);
    }
    for (i, &c) in z0.iter().enumerate() {
        out[i] = k.add(out[i], c);
    }
    for (i, &c) in z1.iter().enumerate() {
        out[m + i] = k.add(out[m + i], c);
    }
    for (i, &c) in z2.iter().enumerate() {
        out[2 * m + i] = k.add(out[2 * m + i], c);
    }
}

fn padded_add<K: Kern>(k: K, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = k.add(x, y);
    }
    out
}

/// Squaring; in characteristic 2 this is coefficient-wise.
fn sqr_codes<K: Kern>(k: K, a: &[u64]) -> Vec<u64> {
    if k.characteristic() == 2 {
        let mut out = vec![0u64; 2 * a.len() - 1];
        for (i, &c) in a.iter().enumerate() {
            out[2 * i] = k.mul(c, c);
        }
        return out;
    }
    mul_codes(k, a, a)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

// ----- division, remainder, gcd ---------------------------------------------

/// Schoolbook division; returns (quotient, remainder).
fn div_rem_codes<K: Kern>(k: K, mut a: Vec<u64>, b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    trim(&mut a);
    if a.len() < b.len() {
        return (Vec::new(), a);
    }
    let lead_inv = k.inv(*b.last().unwrap());
    let qlen = a.len() - b.len() + 1;
    let mut q = vec![0u64; qlen];
    for shift in (0..qlen).rev() {
        let top = a[shift + b.len() - 1];
        if top == 0 {
            continue;
        }
        let c = k.mul(top, lead_inv);
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            a[shift + i] = k.sub(a[shift + i], k.mul(bc, c));
        }
    }
    a.truncate(b.len() - 1);
    trim(&mut a);
    (q, a)
}

/// Monic gcd of two coefficient vectors.
fn gcd_codes<K: Kern>(k: K, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = div_rem_codes(k, a, &b);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        if lc != 1 {
            let inv = k.inv(lc);
            for c in a.iter_mut() {
                *c = k.mul(*c, inv);
            }
        }
    }
    a
}

// ----- fast reduction by a fixed monic modulus -------------------------------

/// Precomputed context for reduction mod a monic f of degree n >= 1.
/// Newton inversion of the reversed modulus makes each reduction two
/// multiplications; inputs of degree < 2n are supported.
struct ModCtx {
    f: Vec<u64>,
    n: usize,
    /// inverse of rev(f) mod x^(n-1), empty when n is small enough for
    /// schoolbook reduction.
    finv: Vec<u64>,
}

const NEWTON_MIN_DEGREE: usize = 64;

impl ModCtx {
    fn new<K: Kern>(k: K, f: &[u64]) -> ModCtx {
        let n = f.len() - 1;
        debug_assert!(n >= 1);
        debug_assert_eq!(*f.last().unwrap(), 1, "modulus must be monic");
        let finv = if n >= NEWTON_MIN_DEGREE {
            let prec = n - 1;
            let rev: Vec<u64> = f.iter().rev().copied().collect();
            newton_inverse(k, &rev, prec)
        } else {
            Vec::new()
        };
        ModCtx { f: f.to_vec(), n, finv }
    }

    /// a mod f for deg a < 2n (larger inputs fall back to schoolbook).
    fn rem<K: Kern>(&self, k: K, mut a: Vec<u64>) -> Vec<u64> {
        trim(&mut a);
        if a.len() <= self.n {
            return a;
        }
        let m = a.len() - 1;
        if self.finv.is_empty() || m - self.n + 1 > self.finv.len() {
            return div_rem_codes(k, a, &self.f).1;
        }
        let qlen = m - self.n + 1;
        // rev(Q) = rev(A) * inv(rev(f)) mod x^qlen
        let arev: Vec<u64> = a.iter().rev().take(qlen).copied().collect();
        let mut qrev = mul_codes(k, &arev, &self.finv[..qlen.min(self.finv.len())]);
        qrev.truncate(qlen);
        let q: Vec<u64> = qrev.iter().rev().copied().collect();
        let mut q = q;
        // strip leading zeros of the reversed quotient (low-order zeros of qrev)
        let mut lead_zeros = 0;
        while lead_zeros < q.len() && q[q.len() - 1 - lead_zeros] == 0 {
            lead_zeros += 1;
        }
        q.truncate(q.len() - lead_zeros);
        if q.is_empty() {
            a.truncate(self.n);
            trim(&mut a);
            return a;
        }
        let qf = mul_codes(k, &q, &self.f);
        let mut r = vec![0u64; self.n];
        for (i, slot) in r.iter_mut().enumerate() {
            let av = a.get(i).copied().unwrap_or(0);
            let qv = qf.get(i).copied().unwrap_or(0);
            *slot = k.sub(av, qv);
        }
        if cfg!(debug_assertions) {
            for i in self.n..a.len() {
                debug_assert_eq!(a[i], qf.get(i).copied().unwrap_or(0), "reduction mismatch");
            }
        }
        trim(&mut r);
        r
    }

    fn mul_mod<K: Kern>(&self, k: K, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        self.rem(k, mul_codes(k, a, b))
    }

    fn sqr_mod<K: Kern>(&self, k: K, a: &[u64]) -> Vec<u64> {
        if a.is_empty() {
            return Vec::new();
        }
        self.rem(k, sqr_codes(k, a))
    }
}

/// Inverse of g (g[0] != 0) as a power series mod x^prec, by Newton
/// iteration v <- v(2 - gv).
fn newton_inverse<K: Kern>(k: K, g: &[u64], prec: usize) -> Vec<u64> {
    debug_assert!(g[0] != 0);
    let mut v = vec![k.inv(g[0])];
    let two = k.add(1, 1);
    let mut cur = 1usize;
    while cur < prec {
        cur = (cur * 2).min(prec);
        let gt = &g[..cur.min(g.len())];
        let mut gv = mul_codes(k, gt, &v);
        gv.truncate(cur);
        // w = 2 - gv
        let mut w = vec![0u64; cur];
        w[0] = k.sub(two, gv.first().copied().unwrap_or(0));
        for i in 1..cur {
            w[i] = k.sub(0, gv.get(i).copied().unwrap_or(0));
        }
        let mut nv = mul_codes(k, &v, &w);
        nv.truncate(cur);
        nv.resize(cur, 0);
        v = nv;
    }
    v.truncate(prec);
    v
}

// ----- modular exponentiation and composition --------------------------------

/// base^exp mod f.
fn pow_mod<K: Kern>(k: K, ctx: &ModCtx, base: &[u64], mut exp: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    if ctx.n == 0 {
        return Vec::new();
    }
    let mut base = ctx.rem(k, base.to_vec());
    while exp > 0 {
        if exp & 1 == 1 {
            result = ctx.mul_mod(k, &result, &base);
        }
        exp >>= 1;
        if exp > 0 {
            base = ctx.sqr_mod(k, &base);
        }
    }
    result
}

/// g(h) mod f by Brent-Kung block decomposition: g is cut into sqrt-size
/// blocks, each block evaluated at h by scalar combinations of the powers
/// h^0..h^(s-1), and the blocks folded by Horner steps with h^s.
fn compose_mod<K: Kern>(k: K, ctx: &ModCtx, g: &[u64], h: &[u64]) -> Vec<u64> {
    let mut g = g.to_vec();
    trim(&mut g);
    if g.is_empty() {
        return Vec::new();
    }
    if g.len() == 1 {
        return g;
    }
    let h = ctx.rem(k, h.to_vec());
    // A monomial c*x^t composes by plain powering.
    if nonzero_count(&g, 1) == 1 {
        let t = g.len() - 1;
        let c = g[t];
        let mut r = pow_mod(k, ctx, &h, t as u64);
        if c != 1 {
            for slot in r.iter_mut() {
                *slot = k.mul(*slot, c);
            }
        }
        return r;
    }
    // Horner is cheaper for short g.
    if g.len() <= 16 {
        let mut acc: Vec<u64> = Vec::new();
        for &c in g.iter().rev() {
            acc = ctx.mul_mod(k, &acc, &h);
            if c != 0 {
                if acc.is_empty() {
                    acc.push(c);
                } else {
                    acc[0] = k.add(acc[0], c);
                }
            }
            trim(&mut acc);
        }
        return acc;
    }
    let s = (g.len() as f64).sqrt().ceil() as usize;
    let blocks = g.len().div_ceil(s);
    // h^0 .. h^s, squaring into the even slots
    let mut h_pows: Vec<Vec<u64>> = Vec::with_capacity(s + 1);
    h_pows.push(vec![1]);
    for i in 1..=s {
        let next = if i % 2 == 0 {
            ctx.sqr_mod(k, &h_pows[i / 2])
        } else {
            ctx.mul_mod(k, &h_pows[i - 1], &h)
        };
        h_pows.push(next);
    }
    // block evaluations: B_j = sum_i g[j*s+i] h^i, degree < n, no reduction needed
    let width = ctx.n;
    let mut block_vals: Vec<Vec<u64>> = Vec::with_capacity(blocks);
    for j in 0..blocks {
        let mut acc = vec![0u64; width.max(1)];
        for i in 0..s {
            let Some(&c) = g.get(j * s + i) else { break };
            if c == 0 {
                continue;
            }
            let hp = &h_pows[i];
            k.scale_add_acc(&mut acc[..hp.len()], hp, c);
        }
        k.finalize_acc(&mut acc);
        trim(&mut acc);
        block_vals.push(acc);
    }
    // Horner over blocks with step h^s
    let step = &h_pows[s];
    let mut result = block_vals.pop().unwrap();
    while let Some(b) = block_vals.pop() {
        result = ctx.mul_mod(k, &result, step);
        result = padded_add(k, &result, &b);
        trim(&mut result);
    }
    result
}

// ----- Frobenius powers and the irreducibility test --------------------------

/// Computes x^(q^m) mod f, memoizing every intermediate exponent:
/// pi_(a+b) = pi_a composed with pi_b since the coefficients are fixed by
/// the q-power map. Exponents with q^m < deg f are free monomials.
struct FrobeniusChain {
    q: u64,
    memo: std::collections::BTreeMap<u64, Vec<u64>>,
}

impl FrobeniusChain {
    fn new<K: Kern>(k: K, ctx: &ModCtx, q: u64) -> FrobeniusChain {
        let x = vec![0u64, 1];
        let pi1 = pow_mod(k, ctx, &x, q);
        let mut memo = std::collections::BTreeMap::new();
        memo.insert(1, pi1);
        FrobeniusChain { q, memo }
    }

    /// Monomial shortcut: x^(q^m) reduced is x^(q^m) itself when the
    /// exponent stays below deg f.
    fn free_monomial(&self, ctx: &ModCtx, m: u64) -> Option<Vec<u64>> {
        let t = u32::try_from(m).ok().and_then(|m| crate::arith::checked_pow(self.q, m))?;
        if (t as usize) < ctx.n {
            let mut mono = vec![0u64; t as usize + 1];
            mono[t as usize] = 1;
            Some(mono)
        } else {
            None
        }
    }

    fn doubling<K: Kern>(&mut self, k: K, ctx: &ModCtx, target: u64) -> Vec<u64> {
        debug_assert!(target.is_power_of_two());
        if let Some(v) = self.memo.get(&target) {
            return v.clone();
        }
        let next = match self.free_monomial(ctx, target) {
            Some(mono) => mono,
            None => {
                let half = self.doubling(k, ctx, target / 2);
                compose_mod(k, ctx, &half, &half)
            }
        };
        self.memo.insert(target, next.clone());
        next
    }

    /// x^(q^m) mod f, reusing the largest memoized exponents first.
    fn get<K: Kern>(&mut self, k: K, ctx: &ModCtx, m: u64) -> Vec<u64> {
        if m == 0 {
            return ctx.rem(k, vec![0, 1]);
        }
        if let Some(v) = self.memo.get(&m) {
            return v.clone();
        }
        if let Some(mono) = self.free_monomial(ctx, m) {
            self.memo.insert(m, mono.clone());
            return mono;
        }
        // greedy: largest memoized exponent <= m, else the largest
        // power-of-two doubling that fits
        let mut result: Option<Vec<u64>> = None;
        let mut have = 0u64;
        while have < m {
            let remaining = m - have;
            let step_exp = match self.memo.range(..=remaining).next_back() {
                Some((&e, _)) => e,
                None => 1,
            };
            let step_exp = if step_exp < remaining {
                // a bigger doubling may still fit
                let pow2 = 1u64 << (63 - remaining.leading_zeros());
                step_exp.max(pow2.min(remaining))
            } else {
                step_exp
            };
            let step = if step_exp.is_power_of_two() {
                self.doubling(k, ctx, step_exp)
            } else {
                match self.memo.get(&step_exp) {
                    Some(v) => v.clone(),
                    None => self.get(k, ctx, step_exp),
                }
            };
            result = Some(match result {
                None => step,
                Some(r) => compose_mod(k, ctx, &r, &step),
            });
            have += step_exp;
            if have < m {
                self.memo.insert(have, result.clone().unwrap());
            }
        }
        let out = result.unwrap();
        self.memo.insert(m, out.clone());
        out
    }
}

/// Distinct-degree irreducibility test for a monic f of degree >= 2.
fn rabin_irreducible<K: Kern>(k: K, field: &Field, f: &[u64]) -> bool {
    let n = f.len() - 1;
    let q = field.q();
    let ctx = ModCtx::new(k, f);
    let mut chain = FrobeniusChain::new(k, &ctx, q);
    let x_mod_f = ctx.rem(k, vec![0, 1]);

    // gcd(x^(q^(n/t)) - x, f) must be constant for every prime t | n
    for t in distinct_prime_factors(n as u64) {
        let m = n as u64 / t;
        let pi = chain.get(k, &ctx, m);
        let diff = sub_padded(k, &pi, &x_mod_f);
        if diff.is_empty() {
            return false; // every irreducible factor has degree dividing n/t
        }
        let g = gcd_codes(k, f, &diff);
        if g.len() > 1 {
            return false;
        }
    }
    // x^(q^n) must come back to x
    let pin = chain.get(k, &ctx, n as u64);
    pin == x_mod_f
}

fn sub_padded<K: Kern>(k: K, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = k.sub(x, y);
    }
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f5() -> Field {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let f = f5();
        let p = Poly::parse(&f, "x^4+4*x^2+1").unwrap();
        assert_eq!(p.degree(), Some(4));
        assert_eq!(Poly::parse(&f, "1,0,4,0,1").unwrap(), p);
        assert_eq!(p.to_string(), "x^4+4*x^2+1");
        let m = Poly::parse(&f, "x^2-2").unwrap();
        assert_eq!(m.to_string(), "x^2+3");
        assert_eq!(Poly::parse(&f, "0").unwrap(), Poly::zero(&f));
    }

    #[test]
    fn compose_examples() {
        let f = f5();
        // identity composition
        let p = Poly::parse(&f, "x^2-2").unwrap();
        assert_eq!(p.compose(&Poly::x(&f)).unwrap(), p);
        // (x^2+2)^2 + 2 = x^4 + 4x^2 + 6 = x^4 + 4x^2 + 1 over F_5
        let g = Poly::parse(&f, "x^2+2").unwrap();
        let gg = g.compose(&g).unwrap();
        assert_eq!(gg, Poly::parse(&f, "x^4+4*x^2+1").unwrap());
        // composing with a constant evaluates
        let c = Poly::parse(&f, "3").unwrap();
        let comp = g.compose(&c).unwrap();
        assert_eq!(comp, Poly::parse(&f, "1").unwrap()); // 9 + 2 = 11 = 1
    }

    #[test]
    fn compose_degree_multiplies() {
        let f = Field::new(7, 1).unwrap();
        let a = Poly::parse(&f, "x^3+2*x+1").unwrap();
        let b = Poly::parse(&f, "2*x^2+3").unwrap();
        let c = a.compose(&b).unwrap();
        assert_eq!(c.degree(), Some(6));
    }

    #[test]
    fn iterate_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let p = Poly::parse(&f3, "x^2+1").unwrap();
        assert_eq!(p.iterate(1).unwrap(), p);
        // (x^2+1)^2 + 1 = x^4 + 2x^2 + 2
        assert_eq!(p.iterate(2).unwrap(), Poly::parse(&f3, "x^4+2*x^2+2").unwrap());
        // cap: degree 2^13 exceeds 4096
        assert!(matches!(p.iterate(13), Err(Error::DegreeCapExceeded { .. })));
    }

    #[test]
    fn division_and_gcd() {
        let f = f5();
        let a = Poly::parse(&f, "x^5+2*x^3+x+4").unwrap();
        let b = Poly::parse(&f, "x^2+3*x+1").unwrap();
        let (q, r) = a.div_rem(&b).unwrap();
        let back = q.mul(&b).unwrap().add(&r).unwrap();
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());

        let p1 = Poly::parse(&f, "x^2-1").unwrap(); // (x-1)(x+1)
        let p2 = Poly::parse(&f, "x^2+3*x+2").unwrap(); // (x+1)(x+2)
        let g = p1.gcd(&p2).unwrap();
        assert_eq!(g, Poly::parse(&f, "x+1").unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert!(Poly::parse(&f3, "x^2+1").unwrap().is_irreducible());
        let f = f5();
        assert!(!Poly::parse(&f, "x^2-1").unwrap().is_irreducible());
        // second iterate of x^2+2 over F_5 factors
        let p = Poly::parse(&f, "x^2+2").unwrap();
        assert!(p.is_irreducible());
        assert!(!p.iterate(2).unwrap().is_irreducible());
        // constants and zero are not irreducible
        assert!(!Poly::parse(&f, "3").unwrap().is_irreducible());
        assert!(!Poly::zero(&f).is_irreducible());
        // x^4 - 3 over F_7: 3 = -4*b^4 territory, reducible despite 3 being a non-square
        let f7 = Field::new(7, 1).unwrap();
        assert!(!Poly::parse(&f7, "x^4-3").unwrap().is_irreducible());
        assert!(Poly::parse(&f7, "x^3-2").unwrap().is_irreducible());
    }

    /// Brute-force irreducibility: trial division by every monic divisor
    /// of degree up to half. Small inputs only.
    fn brute_irreducible(p: &Poly) -> bool {
        let f = p.field();
        let n = match p.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        for d in 1..=n / 2 {
            let count = f.q().pow(d as u32);
            for lower in 0..count {
                let mut codes = Vec::with_capacity(d + 1);
                let mut rest = lower;
                for _ in 0..d {
                    codes.push(rest % f.q());
                    rest /= f.q();
                }
                codes.push(1);
                let divisor = Poly::from_codes(f, &codes).unwrap();
                if p.rem(&divisor).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_matches_brute_force_small() {
        // all polynomials of degree <= 3 over F_q, q <= 9
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = Field::of_order(q).unwrap();
            for deg in 1..=3usize {
                let count = q.pow(deg as u32);
                for body in 0..count {
                    for lead in 1..q {
                        let mut codes = Vec::with_capacity(deg + 1);
                        let mut rest = body;
                        for _ in 0..deg {
                            codes.push(rest % q);
                            rest /= q;
                        }
                        codes.push(lead);
                        let p = Poly::from_codes(&f, &codes).unwrap();
                        assert_eq!(
                            p.is_irreducible(),
                            brute_irreducible(&p),
                            "q={q} poly={p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_power_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let p = Poly::parse(&f3, "x^2+1").unwrap();
        // k = 0 is x itself
        assert_eq!(p.frobenius_power(0).unwrap(), Poly::x(&f3));
        // x^3 mod (x^2+1) = -x = 2x
        assert_eq!(p.frobenius_power(1).unwrap(), Poly::parse(&f3, "2*x").unwrap());
        // linear modulus: x^(q^k) mod (x - c) = c^(q^k) = c
        let f7 = Field::new(7, 1).unwrap();
        let lin = Poly::parse(&f7, "x-3").unwrap();
        assert_eq!(lin.frobenius_power(5).unwrap(), Poly::parse(&f7, "3").unwrap());
    }

    #[test]
    fn frobenius_power_matches_pow_mod() {
        // cross-check the composition chain against direct exponentiation
        for q in [5u64, 9, 8] {
            let f = Field::of_order(q).unwrap();
            let m = match q {
                5 => Poly::parse(&f, "x^6+x^4+2*x+3").unwrap(),
                _ => {
                    // build some degree-6 polynomial with scattered coefficients
                    Poly::from_codes(&f, &[3, 1, 0, 2, 0, 1, 1]).unwrap()
                }
            };
            let monic = m.make_monic();
            for k in 0..4u64 {
                let via_chain = m.frobenius_power(k).unwrap();
                // direct: x^(q^k) mod m by one big exponentiation
                let exp = q.pow(k as u32);
                let direct = dispatch!(&f, kern, {
                    let ctx = ModCtx::new(kern, monic.codes_ref());
                    pow_mod(kern, &ctx, &[0, 1], exp)
                });
                assert_eq!(via_chain.codes_ref(), &direct[..], "q={q} k={k}");
            }
        }
    }

    #[test]
    fn mul_matches_schoolbook_large() {
        // Karatsuba against the generic schoolbook on a few pseudo-random inputs
        let f = Field::new(19, 1).unwrap();
        let mut state = 11u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % 19
        };
        for len in [64usize, 257, 1000] {
            let a: Vec<u64> = (0..len).map(|_| next()).collect();
            let b: Vec<u64> = (0..len + 37).map(|_| next()).collect();
            let pa = Poly::from_codes(&f, &a).unwrap();
            let pb = Poly::from_codes(&f, &b).unwrap();
            let fast = pa.mul(&pb).unwrap();
            let mut slow = vec![0u64; pa.codes_ref().len() + pb.codes_ref().len() - 1];
            GenericKern { field: &f }.schoolbook_into(&mut slow, pa.codes_ref(), pb.codes_ref());
            trim(&mut slow);
            assert_eq!(fast.codes_ref(), &slow[..], "len={len}");
        }
    }

    #[test]
    fn eval_and_scale() {
        let f = f5();
        let p = Poly::parse(&f, "x^3+2*x+1").unwrap();
        assert_eq!(p.eval(&f.from_int(2)), f.from_int(13)); // 8 + 4 + 1
        assert_eq!(p.scale(&f.from_int(2)).eval(&f.from_int(2)), f.from_int(26));
    }
}

//! Construction of and exact arithmetic in F_p and F_{p^e}.
//!
//! Elements are stored as a single integer code: the residue itself for a
//! prime field, and for extensions the base-p integer whose digits (least
//! significant first) are the coefficients of the element with respect to
//! the modulus root. Code order is the canonical enumeration used for
//! deterministic generator choice and for table output.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{checked_pow, distinct_prime_factors, gcd, is_prime};
use crate::error::{Error, Result};

/// Largest supported field size. Chosen so exhaustive root searches and
/// order computations stay cheap.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Fields up to this size carry dense add/mul tables; beyond it element
/// arithmetic decodes coefficient vectors on the fly.
const TABLE_MAX_Q: u64 = 256;

/// Moduli used by the published table of stable binomials, so that
/// regenerated output carries the same generator labels.
const STANDARD_MODULI: &[(u64, &[u64])] = &[
    (4, &[1, 1, 1]),      // X^2 + X + 1
    (8, &[1, 1, 0, 1]),   // X^3 + X + 1
    (9, &[2, 2, 1]),      // X^2 + 2X + 2
    (16, &[1, 1, 0, 0, 1]), // X^4 + X + 1
    (25, &[2, 4, 1]),     // X^2 + 4X + 2
];

struct FieldInner {
    p: u64,
    e: u32,
    q: u64,
    /// Ascending coefficients of the monic degree-e modulus; empty for e = 1.
    modulus: Vec<u64>,
    /// Dense q*q mul/add tables for small fields, codes as u16.
    mul_table: Option<Vec<u16>>,
    add_table: Option<Vec<u16>>,
    neg_table: Option<Vec<u16>>,
    generator: OnceLock<u64>,
}

/// A description of F_q = F_{p^e}. Cheap to clone; equality compares
/// (p, e, modulus), so independently constructed identical specs
/// interoperate.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.e == other.inner.e
            && self.inner.modulus == other.inner.modulus
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{} (p={}, e={})", self.inner.q, self.inner.p, self.inner.e)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.inner.q)
    }
}

impl Field {
    /// Builds F_{p^e} with the default modulus: the standard one for the
    /// field sizes used by the published table, otherwise the irreducible
    /// monic polynomial with the smallest canonical code.
    pub fn new(p: u64, e: u32) -> Result<Field> {
        Self::build(p, e, None)
    }

    /// Builds F_{p^e} with an explicit modulus (ascending coefficients,
    /// monic, length e + 1). Rejected unless irreducible over F_p.
    pub fn with_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<Field> {
        Self::build(p, e, Some(modulus))
    }

    /// Builds F_q for a prime power q, default modulus.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, e) = crate::arith::split_prime_power(q)
            .ok_or(Error::Parse(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    fn build(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::BadExtensionDegree);
        }
        let q = checked_pow(p, e).filter(|&q| q <= MAX_FIELD_SIZE).ok_or_else(|| {
            Error::FieldTooLarge(checked_pow(p, e).unwrap_or(u64::MAX))
        })?;

        let modulus: Vec<u64> = match (e, modulus) {
            (1, None) => Vec::new(),
            (1, Some(m)) => {
                // A degree-1 modulus X - c defines the same field; accept
                // and normalize it away.
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m.len() != 2 || m[1] != 1 {
                    return Err(Error::ModulusDegree { expected: 1, got: m.len().saturating_sub(1) });
                }
                Vec::new()
            }
            (_, Some(m)) => {
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::ModulusDegree {
                        expected: e,
                        got: m.len().saturating_sub(1),
                    });
                }
                if !modulus_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            (_, None) => default_modulus(p, e, q)?,
        };

        let mut field = FieldInner {
            p,
            e,
            q,
            modulus,
            mul_table: None,
            add_table: None,
            neg_table: None,
            generator: OnceLock::new(),
        };
        if e > 1 && q <= TABLE_MAX_Q {
            build_tables(&mut field);
        }
        Ok(Field { inner: Arc::new(field) })
    }

    /// Parses "q=9" or "q=3^2", "p=3,e=2", or "p=3,e=2,mod=2,2,1"
    /// (ascending coefficients including the leading 1).
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("q=") {
            if let Some((p, e)) = rest.split_once('^') {
                return Field::new(parse_num(p)?, parse_num(e)? as u32);
            }
            let q: u64 = parse_num(rest)?;
            return Field::of_order(q);
        }
        let mut p = None;
        let mut e = 1u32;
        let mut modulus: Option<Vec<u64>> = None;
        // `mod=` swallows the rest of the string since its value contains commas.
        let mut parts = s.split(',').peekable();
        while let Some(part) = parts.next() {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "p" => p = Some(parse_num(value)?),
                "e" => e = parse_num(value)? as u32,
                "mod" => {
                    let mut coeffs = vec![parse_num(value)?];
                    for c in parts.by_ref() {
                        coeffs.push(parse_num(c)?);
                    }
                    modulus = Some(coeffs);
                }
                other => return Err(Error::Parse(format!("unknown field key {other:?}"))),
            }
        }
        let p = p.ok_or_else(|| Error::Parse("field spec needs p= or q=".into()))?;
        match modulus {
            Some(m) => Field::with_modulus(p, e, &m),
            None => Field::new(p, e),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Ascending modulus coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.inner.e == 1 {
            None
        } else {
            Some(&self.inner.modulus)
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0).unwrap()
    }

    pub fn one(&self) -> FieldElement {
        self.element(1).unwrap()
    }

    /// Element with the given canonical code (base-p digit encoding of the
    /// coefficient vector, constant term least significant).
    pub fn element(&self, code: u64) -> Result<FieldElement> {
        if code >= self.inner.q {
            return Err(Error::ElementRange { code, q: self.inner.q });
        }
        Ok(FieldElement { field: self.clone(), code })
    }

    /// Embeds an integer (possibly negative) as a multiple of 1.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.inner.p as i64;
        let r = n.rem_euclid(p) as u64;
        FieldElement { field: self.clone(), code: r }
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |code| FieldElement { field: self.clone(), code })
    }

    /// First element in canonical order with multiplicative order q - 1.
    /// Deterministic per spec; requires q >= 3.
    pub fn generator(&self) -> Result<FieldElement> {
        if self.inner.q < 3 {
            return Err(Error::Hypothesis("generator search needs q >= 3".into()));
        }
        let code = *self.inner.generator.get_or_init(|| {
            let target = self.inner.q - 1;
            let primes = distinct_prime_factors(target);
            'outer: for code in 2..self.inner.q {
                for &l in &primes {
                    if self.pow_code(code, target / l) == 1 {
                        continue 'outer;
                    }
                }
                return code;
            }
            unreachable!("F_q^* is cyclic, a generator exists")
        });
        self.element(code)
    }

    /// Parses an element: an integer (any residue, negatives allowed), "0",
    /// "1", or a power "a^k" of the canonical generator ("a" alone is a^1).
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        if let Ok(n) = s.parse::<i64>() {
            if self.inner.e == 1 {
                return Ok(self.from_int(n));
            }
            // For extensions a bare integer means a canonical code.
            if n >= 0 && (n as u64) < self.inner.q {
                return self.element(n as u64);
            }
            return Err(Error::Parse(format!("code {n} out of range for {self}")));
        }
        let rest = s
            .strip_prefix("a^")
            .or_else(|| s.strip_prefix("g^"))
            .map(str::trim);
        if let Some(k) = rest {
            let k: u64 = parse_num(k)?;
            return Ok(self.generator()?.pow(k));
        }
        if s == "a" || s == "g" {
            return self.generator();
        }
        Err(Error::Parse(format!("cannot read {s:?} as an element of {self}")))
    }

    // ----- raw code arithmetic -------------------------------------------

    #[inline]
    pub(crate) fn add_code(&self, a: u64, b: u64) -> u64 {
        let f = &*self.inner;
        if f.e == 1 {
            let s = a + b;
            return if s >= f.p { s - f.p } else { s };
        }
        if let Some(t) = &f.add_table {
            return t[(a * f.q + b) as usize] as u64;
        }
        digitwise(f.p, f.e, a, b, |x, y, p| (x + y) % p)
    }

    #[inline]
    pub(crate) fn sub_code(&self, a: u64, b: u64) -> u64 {
        self.add_code(a, self.neg_code(b))
    }

    #[inline]
    pub(crate) fn neg_code(&self, a: u64) -> u64 {
        let f = &*self.inner;
        if f.e == 1 {
            return if a == 0 { 0 } else { f.p - a };
        }
        if let Some(t) = &f.neg_table {
            return t[a as usize] as u64;
        }
        digitwise(f.p, f.e, a, 0, |x, _, p| (p - x) % p)
    }

    #[inline]
    pub(crate) fn mul_code(&self, a: u64, b: u64) -> u64 {
        let f = &*self.inner;
        if f.e == 1 {
            return a * b % f.p;
        }
        if let Some(t) = &f.mul_table {
            return t[(a * f.q + b) as usize] as u64;
        }
        self.mul_code_generic(a, b)
    }

    fn mul_code_generic(&self, a: u64, b: u64) -> u64 {
        let f = &*self.inner;
        let e = f.e as usize;
        let p = f.p;
        let av = decode(p, e, a);
        let bv = decode(p, e, b);
        // Schoolbook product then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &ai) in av.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in bv.iter().enumerate() {
                prod[i + j] += ai * bj;
            }
        }
        for c in prod.iter_mut() {
            *c %= p;
        }
        for i in (e..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..e {
                let m = f.modulus[j];
                if m != 0 {
                    let t = prod[i - e + j] + (p - m) * c % p;
                    prod[i - e + j] = t % p;
                }
            }
        }
        encode(p, &prod[..e])
    }

    #[inline]
    pub(crate) fn pow_code(&self, mut base: u64, mut exp: u64) -> u64 {
        if base == 0 {
            return if exp == 0 { 1 } else { 0 };
        }
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv_code(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(self.pow_code(a, self.inner.q - 2))
    }

    /// Coefficient backend selector for the polynomial layer.
    pub(crate) fn kernel(&self) -> KernelKind<'_> {
        let f = &*self.inner;
        if f.e == 1 {
            return KernelKind::Prime(f.p);
        }
        match (&f.mul_table, &f.add_table, &f.neg_table) {
            (Some(mul), Some(add), Some(neg)) => KernelKind::Table {
                p: f.p,
                q: f.q as usize,
                mul,
                add,
                neg,
            },
            _ => KernelKind::Generic,
        }
    }
}

/// How the polynomial layer should treat coefficient codes.
pub(crate) enum KernelKind<'a> {
    Prime(u64),
    Table { p: u64, q: usize, mul: &'a [u16], add: &'a [u16], neg: &'a [u16] },
    Generic,
}

/// An element of a specific F_q.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u64,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer code in [0, q).
    pub fn code(&self) -> u64 {
        self.code
    }

    /// Coefficient vector over F_p, ascending, length e.
    pub fn coeffs(&self) -> Vec<u64> {
        decode(self.field.p(), self.field.e() as usize, self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    pub fn is_one(&self) -> bool {
        self.code == 1
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), code: self.field.pow_code(self.code, exp) }
    }

    pub fn inverse(&self) -> Option<FieldElement> {
        self.field
            .inv_code(self.code)
            .map(|code| FieldElement { field: self.field.clone(), code })
    }

    /// Minimal t >= 1 with self^t = 1; divides q - 1. Errors on zero.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let group = self.field.q() - 1;
        let mut ord = group;
        for l in distinct_prime_factors(group) {
            while ord % l == 0 && self.field.pow_code(self.code, ord / l) == 1 {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// Whether self is an l-th power in F_q^* for prime l. Uses the
    /// exponent criterion: automatically true when l does not divide q - 1,
    /// otherwise self^((q-1)/l) = 1. Errors on zero.
    pub fn is_lth_power(&self, l: u64) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !is_prime(l) {
            return Err(Error::NotPrime(l));
        }
        Ok(self.is_mth_power_unchecked(l))
    }

    /// Same criterion for an arbitrary exponent m >= 1 (membership in the
    /// subgroup of m-th powers).
    pub(crate) fn is_mth_power_unchecked(&self, m: u64) -> bool {
        let group = self.field.q() - 1;
        let idx = group / gcd(group, m);
        self.field.pow_code(self.code, idx) == 1
    }

    /// Some b with b^l = self, found by exhaustive search in canonical
    /// order; `None` when self is not an l-th power. Guarded to q <= 2^20.
    pub fn lth_root(&self, l: u64) -> Result<Option<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let q = self.field.q();
        if q > MAX_FIELD_SIZE {
            return Err(Error::RootSearchGuard(q));
        }
        for code in 1..q {
            if self.field.pow_code(code, l) == self.code {
                return Ok(Some(FieldElement { field: self.field.clone(), code }));
            }
        }
        Ok(None)
    }

    /// Norm down to the prime subfield F_p sitting inside F_{p^e}:
    /// a^(1 + p + ... + p^(e-1)). The result is returned as an element of
    /// F_p. `subfield_size` must equal p; larger subfields are not
    /// identified by this artifact.
    pub fn norm_to_subfield(&self, subfield_size: u64) -> Result<FieldElement> {
        let p = self.field.p();
        if subfield_size != p {
            return Err(Error::NoSuchSubfield(subfield_size));
        }
        let e = self.field.e() as u64;
        let mut exp = 0u64;
        let mut pk = 1u64;
        for _ in 0..e {
            exp += pk;
            pk *= p;
        }
        let n = self.field.pow_code(self.code, exp);
        let digits = decode(p, self.field.e() as usize, n);
        debug_assert!(digits[1..].iter().all(|&d| d == 0), "norm must land in F_p");
        Field::new(p, 1)?.element(digits[0])
    }

    /// Image of a prime-field element inside an extension of the same
    /// characteristic (the constant embedding F_p -> F_{p^e}).
    pub fn embed(&self, ext: &Field) -> Result<FieldElement> {
        if self.field.e() != 1 || ext.p() != self.field.p() {
            return Err(Error::NoSuchSubfield(self.field.q()));
        }
        ext.element(self.code)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

/// Prime-field elements print as residues; extension elements as "0", "1"
/// or "a^k" with a the canonical generator.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.e() == 1 {
            return write!(f, "{}", self.code);
        }
        match self.code {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            _ => {
                let g = self.field.generator().expect("q >= 4 here");
                let mut acc = g.code();
                let mut k = 1u64;
                while acc != self.code {
                    acc = self.field.mul_code(acc, g.code());
                    k += 1;
                }
                if k == 1 {
                    write!(f, "a")
                } else {
                    write!(f, "a^{k}")
                }
            }
        }
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $code_op:ident) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                assert!(self.field == rhs.field, "elements of different fields");
                FieldElement {
                    field: self.field.clone(),
                    code: self.field.$code_op(self.code, rhs.code),
                }
            }
        }
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

element_binop!(Add, add, add_code);
element_binop!(Sub, sub, sub_code);
element_binop!(Mul, mul, mul_code);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), code: self.field.neg_code(self.code) }
    }
}
impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

// ----- construction helpers ----------------------------------------------

fn parse_num(s: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

fn decode(p: u64, e: usize, mut code: u64) -> Vec<u64> {
    let mut v = vec![0u64; e];
    for d in v.iter_mut() {
        *d = code % p;
        code /= p;
    }
    v
}

fn encode(p: u64, digits: &[u64]) -> u64 {
    let mut code = 0u64;
    for &d in digits.iter().rev() {
        code = code * p + d;
    }
    code
}

fn digitwise(p: u64, e: u32, a: u64, b: u64, op: impl Fn(u64, u64, u64) -> u64) -> u64 {
    let e = e as usize;
    let av = decode(p, e, a);
    let bv = decode(p, e, b);
    let out: Vec<u64> = av.iter().zip(&bv).map(|(&x, &y)| op(x, y, p)).collect();
    encode(p, &out)
}

/// Irreducibility of a monic polynomial over F_p by the distinct-degree
/// criterion, self-contained so field construction does not depend on the
/// polynomial module.
fn modulus_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let n = coeffs.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^k) mod f via repeated p-th powers (coefficients are fixed by
    // Fermat, so raising to p just spreads exponents).
    let reduce = |poly: &mut Vec<u64>| {
        while poly.len() > n {
            let top = poly.len() - 1;
            let c = poly[top];
            poly.pop();
            if c != 0 {
                for j in 0..n {
                    let idx = top - (n - j);
                    poly[idx] = (poly[idx] + (p - coeffs[j]) * c) % p;
                }
            }
        }
    };
    let pth_power = |poly: &[u64]| {
        let mut out = vec![0u64; (poly.len() - 1) * p as usize + 1];
        for (i, &c) in poly.iter().enumerate() {
            out[i * p as usize] = c;
        }
        let mut out = out;
        reduce(&mut out);
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    };
    let x = vec![0u64, 1];
    let mut t = x.clone();
    let mut frob_snapshots = Vec::new();
    for k in 1..=n {
        t = pth_power(&t);
        frob_snapshots.push((k, t.clone()));
    }
    // x^(p^n) must reduce to x.
    if frob_snapshots[n - 1].1 != x {
        return false;
    }
    // gcd(x^(p^(n/t)) - x, f) must be constant for every prime t | n.
    for l in distinct_prime_factors(n as u64) {
        let k = n / l as usize;
        let snap = &frob_snapshots[k - 1].1;
        let mut diff = snap.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        while diff.len() > 1 && *diff.last().unwrap() == 0 {
            diff.pop();
        }
        if poly_gcd_deg(p, coeffs, &diff) > 0 {
            return false;
        }
    }
    true
}

/// Degree of gcd(a, b) over F_p; helper for modulus validation only.
fn poly_gcd_deg(p: u64, a: &[u64], b: &[u64]) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    };
    let mut a: Vec<u64> = a.to_vec();
    let mut b: Vec<u64> = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // a := a mod b, then swap
        let lead_inv = inv_mod_p(*b.last().unwrap(), p);
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let shift = a.len() - b.len();
            let c = *a.last().unwrap() * lead_inv % p;
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - bc) * c % p) % p;
            }
            debug_assert_eq!(*a.last().unwrap(), 0);
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    crate::arith::mod_pow(a, p - 2, p)
}

fn default_modulus(p: u64, e: u32, q: u64) -> Result<Vec<u64>> {
    if let Some((_, m)) = STANDARD_MODULI.iter().find(|(size, _)| *size == q) {
        return Ok(m.to_vec());
    }
    // Smallest irreducible monic polynomial by canonical code of its
    // coefficient tuple (constant term least significant).
    for code in 0..q {
        let mut coeffs = decode(p, e as usize, code);
        coeffs.push(1);
        if modulus_irreducible(p, &coeffs) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn build_tables(f: &mut FieldInner) {
    let q = f.q as usize;
    let mut mul = vec![0u16; q * q];
    let mut add = vec![0u16; q * q];
    let mut neg = vec![0u16; q];
    let helper = Field { inner: Arc::new(FieldInner {
        p: f.p,
        e: f.e,
        q: f.q,
        modulus: f.modulus.clone(),
        mul_table: None,
        add_table: None,
        neg_table: None,
        generator: OnceLock::new(),
    }) };
    for a in 0..q as u64 {
        neg[a as usize] = helper.neg_code(a) as u16;
        for b in a..q as u64 {
            let s = helper.add_code(a, b) as u16;
            add[(a as usize) * q + b as usize] = s;
            add[(b as usize) * q + a as usize] = s;
            let m = helper.mul_code(a, b) as u16;
            mul[(a as usize) * q + b as usize] = m;
            mul[(b as usize) * q + a as usize] = m;
        }
    }
    f.mul_table = Some(mul);
    f.add_table = Some(add);
    f.neg_table = Some(neg);
}

//! Regenerates the stable-binomial table: for each prime power q, each
//! admissible degree d, and each a outside {0, 1}, the critical orbit with
//! the first failing value marked and an s./ns. tag.

use std::collections::HashMap;
use std::fmt::Write as _;

use ffbinom::arith::{distinct_prime_factors, prime_powers_in};
use ffbinom::stability::{critical_orbit, stability_verdict};
use ffbinom::{Error, Field, FieldElement, Poly, Result};
use serde::Serialize;

use crate::published::published_tag;

/// One table row.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub q: u64,
    pub d: u64,
    /// Residue (prime field) or generator exponent (extension field).
    pub a_key: u64,
    pub a_label: String,
    /// P_1 .. P_m0 in print form.
    pub orbit: Vec<String>,
    /// 1-based index of the first failing value, when not stable.
    pub marker_index: Option<usize>,
    pub stable: bool,
}

impl TableCell {
    /// "[3,*1,3] ns." with the failing value starred.
    pub fn orbit_text(&self) -> String {
        let mut out = String::from("[");
        for (i, v) in self.orbit.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            if self.marker_index == Some(i + 1) {
                out.push('*');
            }
            out.push_str(v);
        }
        out.push(']');
        out
    }

    pub fn tag(&self) -> &'static str {
        if self.stable {
            "s."
        } else {
            "ns."
        }
    }
}

/// All rows for one (q, d) block.
#[derive(Debug, Clone, Serialize)]
pub struct TableBlock {
    pub q: u64,
    /// Modulus in polynomial text form; `None` for prime fields.
    pub modulus: Option<String>,
    pub d: u64,
    pub cells: Vec<TableCell>,
}

/// Degrees admitted by the table: 2 <= d, d != 0 mod 4, and every prime
/// factor of d divides q - 1 (otherwise every binomial of that degree is
/// reducible and the block is omitted).
pub fn table_degrees(q: u64, d_min: u64, d_max: u64) -> Vec<u64> {
    (d_min.max(2)..=d_max)
        .filter(|&d| d % 4 != 0)
        .filter(|&d| distinct_prime_factors(d).iter().all(|&l| (q - 1) % l == 0))
        .collect()
}

/// Elements of F_q minus {0, 1} in table order: residues 2..q-1 for prime
/// fields, generator powers alpha^1..alpha^(q-2) otherwise. Returns
/// (a_key, label, element).
pub fn table_elements(field: &Field) -> Result<Vec<(u64, String, FieldElement)>> {
    let q = field.q();
    if field.e() == 1 {
        return Ok((2..q)
            .map(|c| (c, c.to_string(), field.element(c).unwrap()))
            .collect());
    }
    let g = field.generator()?;
    let mut out = Vec::with_capacity(q as usize - 2);
    let mut cur = g.clone();
    for k in 1..=q - 2 {
        let label = if k == 1 { "a".to_string() } else { format!("a^{k}") };
        out.push((k, label, cur.clone()));
        cur = cur * g.clone();
    }
    Ok(out)
}

/// Label map for printing orbit values: 0, 1, and generator powers.
fn label_map(field: &Field) -> Result<HashMap<u64, String>> {
    let mut map = HashMap::new();
    map.insert(0, "0".to_string());
    map.insert(1, "1".to_string());
    if field.e() == 1 {
        for c in 2..field.q() {
            map.insert(c, c.to_string());
        }
    } else {
        for (k, label, elem) in table_elements(field)? {
            if k >= 1 && !elem.is_one() {
                map.insert(elem.code(), label);
            }
        }
    }
    Ok(map)
}

pub fn build_block(field: &Field, d: u64) -> Result<TableBlock> {
    let labels = label_map(field)?;
    let mut cells = Vec::new();
    for (a_key, a_label, a) in table_elements(field)? {
        let orbit = critical_orbit(&a, d)?;
        let verdict = stability_verdict(&a, d)?;
        let printed: Vec<String> =
            orbit.printed_values().iter().map(|v| labels[&v.code()].clone()).collect();
        let marker_index = orbit.first_failure.as_ref().map(|f| f.index);
        debug_assert_eq!(marker_index.is_none(), verdict.is_stable());
        cells.push(TableCell {
            q: field.q(),
            d,
            a_key,
            a_label,
            orbit: printed,
            marker_index,
            stable: verdict.is_stable(),
        });
    }
    let modulus = field.modulus().map(|m| {
        let base = Field::new(field.p(), 1).expect("prime field");
        Poly::from_codes(&base, m).expect("valid modulus").to_string()
    });
    Ok(TableBlock { q: field.q(), modulus, d, cells })
}

/// Builds every block for q in [q_min, q_max], d in [d_min, d_max],
/// ordered by q then d.
pub fn build_table(q_min: u64, q_max: u64, d_min: u64, d_max: u64) -> Result<Vec<TableBlock>> {
    if q_max > ffbinom::field::MAX_FIELD_SIZE {
        return Err(Error::FieldTooLarge(q_max));
    }
    let mut blocks = Vec::new();
    for q in prime_powers_in(q_min.max(3), q_max) {
        let field = Field::of_order(q)?;
        for d in table_degrees(q, d_min, d_max) {
            blocks.push(build_block(&field, d)?);
        }
    }
    Ok(blocks)
}

pub fn render_text(blocks: &[TableBlock]) -> String {
    let mut out = String::new();
    for b in blocks {
        match &b.modulus {
            Some(m) => writeln!(out, "q={} M={} d={}", b.q, m, b.d).unwrap(),
            None => writeln!(out, "q={} d={}", b.q, b.d).unwrap(),
        }
        for c in &b.cells {
            writeln!(out, "  {}: {} {}", c.a_label, c.orbit_text(), c.tag()).unwrap();
        }
    }
    out
}

pub fn render_csv(blocks: &[TableBlock]) -> String {
    let mut out = String::from("q,modulus,d,a,orbit,marker_index,tag\n");
    for b in blocks {
        let modulus = b.modulus.as_deref().unwrap_or("-");
        for c in &b.cells {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                b.q,
                modulus,
                b.d,
                c.a_label,
                c.orbit.join(" "),
                c.marker_index.map_or(String::new(), |i| i.to_string()),
                if c.stable { "s" } else { "ns" }
            )
            .unwrap();
        }
    }
    out
}

pub fn render_json(blocks: &[TableBlock]) -> String {
    serde_json::to_string_pretty(blocks).expect("table serializes")
}

/// A regenerated cell whose tag disagrees with the printed table.
#[derive(Debug, Clone, Serialize)]
pub struct TagDiff {
    pub q: u64,
    pub d: u64,
    pub a_label: String,
    pub a_key: u64,
    pub published_stable: bool,
    pub computed_stable: bool,
}

/// Compares regenerated tags against the printed ones; cells the source
/// does not tag are skipped.
pub fn diff_published(blocks: &[TableBlock]) -> Vec<TagDiff> {
    let mut out = Vec::new();
    for b in blocks {
        for c in &b.cells {
            if let Some(published_stable) = published_tag(b.q, b.d, c.a_key) {
                if published_stable != c.stable {
                    out.push(TagDiff {
                        q: b.q,
                        d: b.d,
                        a_label: c.a_label.clone(),
                        a_key: c.a_key,
                        published_stable,
                        computed_stable: c.stable,
                    });
                }
            }
        }
    }
    out
}

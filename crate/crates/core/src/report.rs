//! Plain-text renderings shared by the `relcone` binary and the examples.

use std::fmt::Write;

use crate::cone::{Extended, REVector};
use crate::demo;
use crate::error::Result;
use crate::lattice::{self, SubsetMask, UpSet};
use crate::states::{self, JointDistribution, StatePair};

fn cell(x: Extended) -> String {
    match x {
        // Snap rounding noise so exact constructions print as integers.
        Extended::Finite(v) if (v - v.round()).abs() < 1e-9 => format!("{}", v.round()),
        Extended::Finite(v) => format!("{v:.9}"),
        Extended::Infinite => "inf".into(),
    }
}

/// Column headers and one row per vector, aligned.
pub fn vector_table(n: usize, rows: &[(String, REVector)]) -> Result<String> {
    let labels: Vec<String> = lattice::subsets(n)?.iter().map(|s| s.label()).collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(_, v)| v.values().into_iter().map(cell).collect())
        .collect();
    let widths: Vec<usize> = (0..labels.len())
        .map(|i| {
            cells
                .iter()
                .map(|r| r[i].len())
                .chain([labels[i].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let name_width = rows.iter().map(|(name, _)| name.len()).max().unwrap_or(0);

    let mut out = String::new();
    let header: Vec<String> = labels
        .iter()
        .zip(&widths)
        .map(|(l, w)| format!("{l:>w$}"))
        .collect();
    writeln!(out, "{:name_width$}  {}", "", header.join(" ")).unwrap();
    for ((name, _), row) in rows.iter().zip(&cells) {
        let row: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{name:name_width$}  {}", row.join(" ")).unwrap();
    }
    Ok(out)
}

/// Up-sets of `[n]` as indicator rows; with `classes`, one row per orbit
/// under party relabeling together with the orbit size.
pub fn ray_table(n: usize, classes: bool) -> Result<String> {
    let all = lattice::enumerate_upsets(n)?;
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    if classes {
        for (i, c) in lattice::permutation_classes(&all, n)?.iter().enumerate() {
            rows.push((format!("Ray {}", i + 1), REVector::indicator(&c.representative, 1.0)?));
            notes.push(format!("orbit {}  generators {}", c.size, generators(&c.representative)));
        }
    } else {
        for (i, u) in all.iter().enumerate() {
            rows.push((format!("U{}", i + 1), REVector::indicator(u, 1.0)?));
            notes.push(format!("generators {}", generators(u)));
        }
    }
    let table = vector_table(n, &rows)?;
    let mut out = String::new();
    let mut lines = table.lines();
    writeln!(out, "{}", lines.next().unwrap_or_default()).unwrap();
    for (line, note) in lines.zip(&notes) {
        writeln!(out, "{line}    {note}").unwrap();
    }
    if classes {
        writeln!(out, "{} classes, {} up-sets", rows.len(), all.len()).unwrap();
    } else {
        writeln!(out, "{} up-sets", all.len()).unwrap();
    }
    Ok(out)
}

fn generators(u: &UpSet) -> String {
    let g: Vec<String> = u.minimal_sets().iter().map(|s| s.label()).collect();
    format!("{{{}}}", g.join(", "))
}

/// Atom listing, one `|symbols>  probability` line per atom.
pub fn distribution_listing(name: &str, d: &JointDistribution) -> String {
    let mut out = format!("{name} ({} atoms):\n", d.support_size());
    for (x, p) in d.atoms() {
        writeln!(out, "  |{}>  {}", d.format_atom(x), p).unwrap();
    }
    out
}

fn marginal_listing(pair: &StatePair, label: &str) -> Result<String> {
    let s = SubsetMask::from_label(label, pair.n())?;
    let rho = pair.rho.marginal(s)?;
    let sigma = pair.sigma.marginal(s)?;
    let mut out = distribution_listing(&format!("rho_{label}"), &rho);
    if rho == sigma {
        writeln!(out, "sigma_{label} = rho_{label}").unwrap();
    } else {
        out.push_str(&distribution_listing(&format!("sigma_{label}"), &sigma));
    }
    let d = states::relative_entropy(&rho, &sigma)?;
    writeln!(out, "D(rho_{label} || sigma_{label}) = {}", cell(d)).unwrap();
    Ok(out)
}

fn pair_report(title: &str, pair: &StatePair, marginals: &[&str]) -> Result<String> {
    let mut out = format!("{title}\n\n");
    out.push_str(&distribution_listing("rho = rho(0)", &pair.rho));
    out.push('\n');
    for m in marginals {
        out.push_str(&marginal_listing(pair, m)?);
        out.push('\n');
    }
    let v = states::re_vector(pair)?;
    out.push_str("relative-entropy vector (bits):\n");
    out.push_str(&vector_table(pair.n(), &[("v".into(), v)])?);
    Ok(out)
}

/// Weighted GF(5) Shamir construction, its A and B marginals and its vector.
pub fn example5() -> Result<String> {
    let scheme = demo::example5_scheme()?;
    let pair = scheme.state_pair()?;
    let mut out = pair_report(
        "(4,2) Shamir scheme over GF(5); A holds shares 1-2, B share 3, C share 4",
        &pair,
        &["A", "B"],
    )?;
    out.push('\n');
    out.push_str(&distribution_listing("rho(1)", scheme.table(1)));
    Ok(out)
}

/// Two (2,2) GF(3) Shamir clauses for {AB, CD}, with AB and BC marginals.
pub fn example6() -> Result<String> {
    let scheme = demo::example6_scheme()?;
    let pair = scheme.state_pair()?;
    let mut out = pair_report(
        "two (2,2) Shamir schemes over GF(3): alpha on A,B and beta on C,D",
        &pair,
        &["AB", "BC"],
    )?;
    out.push('\n');
    out.push_str(&distribution_listing("rho(1)", scheme.table(1)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_class_table_rows() {
        let t = ray_table(3, true).unwrap();
        let rows: Vec<&str> = t.lines().skip(1).take(8).collect();
        let expected = [
            "0 0 0 0 0 0 1",
            "0 0 0 1 0 0 1",
            "0 0 0 1 1 0 1",
            "0 0 0 1 1 1 1",
            "1 0 0 1 1 0 1",
            "1 0 0 1 1 1 1",
            "1 1 0 1 1 1 1",
            "1 1 1 1 1 1 1",
        ];
        for (row, want) in rows.iter().zip(expected) {
            let bits: Vec<&str> = row.split_whitespace().skip(2).take(7).collect();
            assert_eq!(bits.join(" "), want, "{row}");
        }
        assert!(t.ends_with("8 classes, 18 up-sets\n"));
    }

    #[test]
    fn single_party_table() {
        let t = ray_table(1, false).unwrap();
        assert!(t.contains("U1  1"));
        assert!(t.ends_with("1 up-sets\n"));
    }

    #[test]
    fn demos_render_deterministically() {
        let a = example5().unwrap();
        assert_eq!(a, example5().unwrap());
        assert!(a.contains("  |00 0 0>  1/5"));
        assert!(a.contains("sigma_B = rho_B"));
        assert!(a.contains("D(rho_A || sigma_A) = 1"));
        let b = example6().unwrap();
        assert!(b.contains("D(rho_BC || sigma_BC) = 0"));
    }
}

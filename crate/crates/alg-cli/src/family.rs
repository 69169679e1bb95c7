//! Family studies: per-parameter tables for odd cycles, complete
//! multipartite graphs, and the cubic catalog.

use alg_core::{generators, opt, spectral, AlgError, Result};

use crate::jsonfmt::round12;
use crate::samples;

pub struct FamilyTable {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl FamilyTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        out.push_str(&format!(
            "|{}\n",
            self.headers.iter().map(|_| " --- |").collect::<String>()
        ));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

fn fmt(x: f64) -> String {
    format!("{}", round12(x))
}

/// Odd cycles C_{2k+1} for k in the range: the defect bound stays exact at 1
/// while the spectral bound decays to zero.
pub fn odd_cycle_family(k_from: usize, k_to: usize) -> Result<FamilyTable> {
    if k_from < 1 || k_from > k_to {
        return Err(AlgError::invalid(
            "odd-cycle range must satisfy 1 <= a <= b",
        ));
    }
    let mut rows = Vec::new();
    for k in k_from..=k_to {
        let n = 2 * k + 1;
        let g = generators::cycle(n)?;
        let l = opt::frustration_index_exact(&g)?.best_value;
        let def = opt::maxcut_exact(&g)?.defect;
        let bound = spectral::spectral_lower_bound(&g)?;
        rows.push(vec![
            k.to_string(),
            n.to_string(),
            l.to_string(),
            def.to_string(),
            fmt(bound),
            fmt(bound / l as f64),
        ]);
    }
    Ok(FamilyTable {
        headers: ["k", "n", "l_alg", "def", "spectral", "spectral/l"]
            .map(String::from)
            .to_vec(),
        rows,
    })
}

const DEFAULT_PART_LISTS: &[&[usize]] =
    &[&[1, 1, 1], &[2, 2, 2], &[1, 2, 3], &[3, 3, 3], &[2, 3, 4]];

/// Complete multipartite graphs: closed-form frustration, exact search where
/// the edge count permits, defect, and the 3/4-sharp spectral bound.
pub fn multipartite_family(parts_arg: Option<&[usize]>) -> Result<FamilyTable> {
    let part_lists: Vec<Vec<usize>> = match parts_arg {
        Some(p) => vec![p.to_vec()],
        None => DEFAULT_PART_LISTS.iter().map(|p| p.to_vec()).collect(),
    };
    let limits = opt::SearchLimits::default();
    let mut rows = Vec::new();
    for parts in &part_lists {
        let g = generators::complete_multipartite(parts)?;
        let closed = opt::complete_multipartite_closed_form(parts)?;
        let searched = if g.edge_count() <= limits.max_orientation_edges {
            opt::frustration_index_exact(&g)?.best_value.to_string()
        } else {
            "-".into()
        };
        let def = if g.vertex_count() <= limits.max_cut_vertices {
            opt::maxcut_exact(&g)?.defect.to_string()
        } else {
            "-".into()
        };
        let bound = spectral::spectral_lower_bound(&g)?;
        rows.push(vec![
            format!(
                "[{}]",
                parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            closed.to_string(),
            searched,
            def,
            fmt(bound),
            fmt(bound / closed as f64),
        ]);
    }
    Ok(FamilyTable {
        headers: [
            "parts",
            "n",
            "m",
            "e3",
            "l_search",
            "def",
            "spectral",
            "spectral/l",
        ]
        .map(String::from)
        .to_vec(),
        rows,
    })
}

/// Named cubic graphs: the exact identity `l = 2 oct` verified per row, plus
/// the spectral lower bound on oct.
pub fn cubic_catalog_family(n_max: usize) -> Result<FamilyTable> {
    let mut rows = Vec::new();
    for (name, g) in samples::cubic_catalog(n_max) {
        let l = opt::frustration_index_exact(&g)?.best_value;
        let oct = opt::oct_exact(&g)?.oct_value;
        let verified = opt::cubic_exactness_check(&g)?;
        let bound = spectral::cubic_oct_spectral_bound(&g)?;
        rows.push(vec![
            name,
            g.vertex_count().to_string(),
            g.edge_count().to_string(),
            l.to_string(),
            oct.to_string(),
            verified.to_string(),
            fmt(bound),
        ]);
    }
    Ok(FamilyTable {
        headers: ["graph", "n", "m", "l_alg", "oct", "l=2oct", "oct_spectral"]
            .map(String::from)
            .to_vec(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_table_shape() {
        let t = odd_cycle_family(1, 5).unwrap();
        assert_eq!(t.rows.len(), 5);
        // l stays 1; spectral column strictly decreasing
        let bounds: Vec<f64> = t.rows.iter().map(|r| r[4].parse().unwrap()).collect();
        assert!(t.rows.iter().all(|r| r[2] == "1" && r[3] == "1"));
        assert!(bounds.windows(2).all(|w| w[0] > w[1]));
        assert!(odd_cycle_family(0, 3).is_err());
        assert!(odd_cycle_family(5, 3).is_err());
    }

    #[test]
    fn multipartite_octahedron_row() {
        let t = multipartite_family(Some(&[2, 2, 2])).unwrap();
        assert_eq!(t.rows.len(), 1);
        let row = &t.rows[0];
        assert_eq!(row[3], "8"); // e3
        assert_eq!(row[4], "8"); // search agrees
        assert_eq!(row[6], "6"); // spectral bound
        assert_eq!(row[7], "0.75");
    }

    #[test]
    fn cubic_table_verifies_identity() {
        let t = cubic_catalog_family(10).unwrap();
        assert!(t.rows.len() >= 5);
        assert!(t.rows.iter().all(|r| r[5] == "true"));
        let petersen_row = t.rows.iter().find(|r| r[0] == "petersen").unwrap();
        assert_eq!(petersen_row[3], "6");
        assert_eq!(petersen_row[4], "3");
    }

    #[test]
    fn renderers_produce_consistent_shapes() {
        let t = odd_cycle_family(1, 3).unwrap();
        let md = t.to_markdown();
        assert_eq!(md.lines().count(), 2 + t.rows.len());
        let csv = t.to_csv();
        assert_eq!(csv.lines().count(), 1 + t.rows.len());
    }
}

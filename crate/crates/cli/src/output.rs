use ibh_core::integer_homology::HomologyGroup;

use crate::Format;

/// Renders rows under a header: tab-separated, or as left-aligned columns.
pub fn table(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str(&header.join("\t"));
            out.push('\n');
            for row in rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(header.to_vec()));
            for row in rows {
                out.push_str(&line(row.iter().map(String::as_str).collect()));
            }
        }
    }
    out
}

pub fn torsion(h: &HomologyGroup, format: Format) -> String {
    let parts: Vec<String> = h.torsion.iter().map(|t| t.to_string()).collect();
    match (format, parts.is_empty()) {
        (Format::Text, true) => "-".into(),
        _ => parts.join(","),
    }
}

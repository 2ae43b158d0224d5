use std::collections::HashMap;

use super::{Crossing, Diagram, Edge, EdgeEnd, End, FreeLoop, H1Class, Surface};
use crate::error::{Error, Result};

/// Edge label and end at each port, in counterclockwise order.
type PortList = [(i64, End); 4];

/// Parses the line-oriented diagram format:
///
/// ```text
/// surface annulus
/// edge 0 h1 1
/// edge 1
/// crossing 0 0.1 1.0 1.1 0.0
/// loop 7 h1 0
/// ```
///
/// Crossing ports are listed counterclockwise with the a–c strand passing
/// under; `<edge>.<0|1>` selects the tail or head end. Declaration order of
/// crossings is the crossing enumeration.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut surface: Option<Surface> = None;
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    let mut loops: Vec<(usize, FreeLoop)> = Vec::new();
    let mut crossings: Vec<(usize, i64, PortList)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some(&keyword) = tokens.first() else {
            continue;
        };
        if surface.is_none() && keyword != "surface" {
            return Err(Error::parse(
                line,
                "the first declaration must be `surface <disk|annulus|torus>`",
            ));
        }
        match keyword {
            "surface" => {
                if surface.is_some() {
                    return Err(Error::parse(line, "surface declared twice"));
                }
                if tokens.len() != 2 {
                    return Err(Error::parse(
                        line,
                        "expected `surface <disk|annulus|torus>`",
                    ));
                }
                surface = Some(Surface::from_name(tokens[1]).ok_or_else(|| {
                    Error::parse(line, format!("unknown surface `{}`", tokens[1]))
                })?);
            }
            "edge" | "loop" => {
                let rank = surface.as_ref().map(Surface::h1_rank).unwrap_or(0);
                let label = parse_label(line, tokens.get(1).copied(), keyword)?;
                let class = parse_h1(line, &tokens[2..], rank)?;
                if keyword == "edge" {
                    edges.push((line, Edge { label, class }));
                } else {
                    loops.push((line, FreeLoop { label, class }));
                }
            }
            "crossing" => {
                if tokens.len() != 6 {
                    return Err(Error::parse(
                        line,
                        "expected `crossing <id> <eA> <eB> <eC> <eD>`",
                    ));
                }
                let label = parse_label(line, Some(tokens[1]), "crossing")?;
                let mut ports = [(0i64, End::Tail); 4];
                for (k, tok) in tokens[2..].iter().enumerate() {
                    ports[k] = parse_port(line, tok)?;
                }
                crossings.push((line, label, ports));
            }
            other => return Err(Error::parse(line, format!("unknown declaration `{other}`"))),
        }
    }

    let surface = surface.ok_or_else(|| Error::parse(None, "missing `surface` declaration"))?;

    let mut edge_index: HashMap<i64, usize> = HashMap::new();
    for (k, (line, e)) in edges.iter().enumerate() {
        if edge_index.insert(e.label, k).is_some() {
            return Err(Error::parse(
                *line,
                format!("edge {} declared twice", e.label),
            ));
        }
    }
    let mut seen = HashMap::new();
    for (line, label, _) in &crossings {
        if seen.insert(*label, *line).is_some() {
            return Err(Error::parse(
                *line,
                format!("crossing {label} declared twice"),
            ));
        }
    }
    let mut seen = HashMap::new();
    for (line, l) in &loops {
        if seen.insert(l.label, *line).is_some() {
            return Err(Error::parse(
                *line,
                format!("loop {} declared twice", l.label),
            ));
        }
    }

    // Every edge end must be attached to exactly one crossing port.
    let mut uses: Vec<Vec<usize>> = vec![Vec::new(); 2 * edges.len()];
    let mut resolved = Vec::with_capacity(crossings.len());
    for (line, label, ports) in &crossings {
        let mut out = [EdgeEnd::new(0, End::Tail); 4];
        for (k, (edge_label, end)) in ports.iter().enumerate() {
            let &edge = edge_index.get(edge_label).ok_or_else(|| {
                Error::parse(
                    *line,
                    format!("crossing {label} refers to undeclared edge {edge_label}"),
                )
            })?;
            out[k] = EdgeEnd::new(edge, *end);
            uses[out[k].index()].push(*line);
        }
        resolved.push(Crossing {
            label: *label,
            ports: out,
        });
    }
    for (idx, lines) in uses.iter().enumerate() {
        let (line, edge) = &edges[idx / 2];
        if lines.len() != 1 {
            let at = if lines.is_empty() {
                format!("declared on line {line}")
            } else {
                let l: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
                format!("on lines {}", l.join(", "))
            };
            return Err(Error::parse(
                lines.first().copied().unwrap_or(*line),
                format!(
                    "edge {} end {} is used {} times ({at}); every edge must be used exactly twice, once per end",
                    edge.label,
                    idx % 2,
                    lines.len()
                ),
            ));
        }
    }

    Diagram::new(
        surface,
        resolved,
        edges.into_iter().map(|(_, e)| e).collect(),
        loops.into_iter().map(|(_, l)| l).collect(),
    )
}

fn parse_label(line: usize, tok: Option<&str>, what: &str) -> Result<i64> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("{what} is missing its id")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} id `{tok}`")))
}

fn parse_h1(line: usize, tokens: &[&str], rank: usize) -> Result<H1Class> {
    match tokens.split_first() {
        None => Ok(H1Class::zero(rank)),
        Some((&"h1", values)) => {
            if values.len() != rank {
                return Err(Error::parse(
                    line,
                    format!(
                        "h1 vector has length {}, the surface has rank {rank}",
                        values.len()
                    ),
                ));
            }
            values
                .iter()
                .map(|v| {
                    v.parse::<i64>()
                        .map_err(|_| Error::parse(line, format!("invalid h1 entry `{v}`")))
                })
                .collect::<Result<Vec<_>>>()
                .map(H1Class)
        }
        Some((tok, _)) => Err(Error::parse(line, format!("expected `h1`, found `{tok}`"))),
    }
}

fn parse_port(line: usize, tok: &str) -> Result<(i64, End)> {
    let bad = || {
        Error::parse(
            line,
            format!("invalid port `{tok}`, expected `<edge>.<0|1>`"),
        )
    };
    let (edge, end) = tok.split_once('.').ok_or_else(bad)?;
    let edge = edge.parse().map_err(|_| bad())?;
    let end = match end {
        "0" => End::Tail,
        "1" => End::Head,
        _ => return Err(bad()),
    };
    Ok((edge, end))
}

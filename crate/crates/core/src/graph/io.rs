use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use super::{CommunityAssignment, EdgeRef, Graph, VertexId};
use crate::{Error, Result};

/// Field separator for text inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Delimiter {
    /// Commas when the line has one, otherwise any run of whitespace.
    #[default]
    Auto,
    Char(char),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadOptions {
    pub delimiter: Delimiter,
    pub drop_self_loops: bool,
    pub symmetrize: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self {
            delimiter: Delimiter::Auto,
            drop_self_loops: true,
            symmetrize: true,
        }
    }
}

/// What normalization did to the raw edge list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadStats {
    /// Data lines read (comments and blanks excluded).
    pub pairs: usize,
    /// Lines repeating a pair already seen in the same orientation, plus
    /// reverse-orientation repeats when symmetrization is off.
    pub duplicates: usize,
    /// Reverse-orientation pairs merged by symmetrization.
    pub reciprocal: usize,
    pub self_loops: usize,
}

fn tokens(line: &str, delimiter: Delimiter) -> Vec<&str> {
    match delimiter {
        Delimiter::Char(c) if c.is_whitespace() => {
            line.split(c).filter(|t| !t.is_empty()).collect()
        }
        Delimiter::Char(c) => line.split(c).map(str::trim).collect(),
        Delimiter::Auto if line.contains(',') => line.split(',').map(str::trim).collect(),
        Delimiter::Auto => line.split_whitespace().collect(),
    }
}

const HEADERS: &[[&str; 2]] = &[
    ["u", "v"],
    ["source", "target"],
    ["vertex", "community"],
    ["node", "community"],
];

fn is_header(fields: &[&str]) -> bool {
    fields.len() == 2
        && HEADERS
            .iter()
            .any(|h| h[0].eq_ignore_ascii_case(fields[0]) && h[1].eq_ignore_ascii_case(fields[1]))
}

/// Iterates `(line_number, [a, b])` over the data lines of a pair file.
fn pairs<R: BufRead>(
    source: R,
    delimiter: Delimiter,
) -> impl Iterator<Item = Result<(usize, [String; 2])>> {
    let mut seen_data = false;
    source.lines().enumerate().filter_map(move |(i, line)| {
        let lineno = i + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::Io(e))),
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let fields = tokens(trimmed, delimiter);
        if !seen_data {
            seen_data = true;
            if is_header(&fields) {
                return None;
            }
        }
        if fields.len() != 2 || fields.iter().any(|f| f.is_empty()) {
            return Some(Err(Error::Parse {
                line: lineno,
                message: format!("expected 2 fields, found {}", fields.len()),
            }));
        }
        Some(Ok((lineno, [fields[0].to_owned(), fields[1].to_owned()])))
    })
}

/// Reads a whitespace-, tab- or comma-separated edge list into an undirected
/// simple graph.
///
/// External ids are remapped to dense ids in order of first appearance.
/// Vertices that only occur on dropped self-loops still become (isolated)
/// vertices.
pub fn load_edge_list<R: BufRead>(source: R, options: &LoadOptions) -> Result<(Graph, LoadStats)> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut intern = |name: String| -> VertexId {
        if let Some(&id) = ids.get(&name) {
            return id;
        }
        let id = names.len() as VertexId;
        names.push(name.clone());
        ids.insert(name, id);
        id
    };

    let mut stats = LoadStats::default();
    let mut directed: HashSet<(VertexId, VertexId)> = HashSet::new();
    let mut edges = Vec::new();
    for item in pairs(source, options.delimiter) {
        let (line, [a, b]) = item?;
        stats.pairs += 1;
        let (a, b) = (intern(a), intern(b));
        if a == b {
            if options.drop_self_loops {
                stats.self_loops += 1;
                continue;
            }
            return Err(Error::Parse {
                line,
                message: format!("self-loop on `{}`", names[a as usize]),
            });
        }
        if !directed.insert((a, b)) {
            stats.duplicates += 1;
            continue;
        }
        if directed.contains(&(b, a)) {
            if options.symmetrize {
                stats.reciprocal += 1;
            } else {
                stats.duplicates += 1;
            }
            continue;
        }
        edges.push(EdgeRef::new(a, b)?);
    }
    Ok((Graph::build(names, edges), stats))
}

/// Reads `vertex community` pairs against the external ids of `g`.
///
/// Vertices missing from the file stay unlabeled. Community names are
/// remapped to dense ids in order of first appearance.
pub fn load_communities<R: BufRead>(source: R, g: &Graph) -> Result<CommunityAssignment> {
    let mut labels: Vec<Option<String>> = vec![None; g.vertex_count()];
    for item in pairs(source, Delimiter::Auto) {
        let (_, [vertex, community]) = item?;
        let v = g
            .vertex_by_name(&vertex)
            .ok_or_else(|| Error::UnknownVertex(vertex.clone()))?;
        match &labels[v as usize] {
            Some(prev) if *prev != community => {
                return Err(Error::ConflictingLabel {
                    vertex,
                    first: prev.clone(),
                    second: community,
                })
            }
            Some(_) => {}
            None => labels[v as usize] = Some(community),
        }
    }
    Ok(CommunityAssignment::from_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<(Graph, LoadStats)> {
        load_edge_list(text.as_bytes(), &LoadOptions::default())
    }

    #[test]
    fn small_path() {
        let (g, _) = load("1 2\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let degrees: Vec<_> = (0..3).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 1]);
    }

    #[test]
    fn comments_blanks_tabs_and_strings() {
        let (g, _) = load("# header\n\nalice\tbob\n  bob   carol  \n").unwrap();
        assert_eq!(g.names(), &["alice", "bob", "carol"]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn remap_is_first_appearance() {
        let (g, _) = load("10 5\n5 7\n").unwrap();
        assert_eq!(g.vertex_by_name("10"), Some(0));
        assert_eq!(g.vertex_by_name("5"), Some(1));
        assert_eq!(g.vertex_by_name("7"), Some(2));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = load("1 2\n# c\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = load("1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let (g, stats) = load("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(stats, LoadStats::default());
    }

    #[test]
    fn duplicates_reciprocals_and_self_loops() {
        let (g, stats) = load("1 2\n2 1\n1 2\n3 3\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.degree(2), 0);
        assert_eq!(
            stats,
            LoadStats {
                pairs: 4,
                duplicates: 1,
                reciprocal: 1,
                self_loops: 1
            }
        );

        let opts = LoadOptions {
            symmetrize: false,
            ..LoadOptions::default()
        };
        let (h, stats) = load_edge_list("1 2\n2 1\n".as_bytes(), &opts).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(stats.duplicates, 1);
        assert_eq!(stats.reciprocal, 0);
    }

    #[test]
    fn self_loop_rejected_when_not_dropping() {
        let opts = LoadOptions {
            drop_self_loops: false,
            ..LoadOptions::default()
        };
        let err = load_edge_list("1 2\n4 4\n".as_bytes(), &opts).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn explicit_delimiter_and_header() {
        let opts = LoadOptions {
            delimiter: Delimiter::Char(';'),
            ..LoadOptions::default()
        };
        let (g, _) = load_edge_list("u;v\na;b\nb;c\n".as_bytes(), &opts).unwrap();
        assert_eq!(g.edge_count(), 2);
        let (g, _) = load("source,target\n1,2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn communities_basic() {
        let (g, _) = load("1 2\n2 3\n").unwrap();
        let c = load_communities("1 0\n2 0\n3 1\n".as_bytes(), &g).unwrap();
        assert_eq!(c.labeled_count(), 3);
        assert_eq!(c.community_count(), 2);
    }

    #[test]
    fn communities_partial_and_empty() {
        let (g, _) = load("1 2\n2 3\n").unwrap();
        let c = load_communities("".as_bytes(), &g).unwrap();
        assert_eq!(c.labeled_count(), 0);
        assert_eq!(c.community_count(), 0);
        let c = load_communities("2 x\n".as_bytes(), &g).unwrap();
        assert_eq!(c.label(0), None);
        assert_eq!(c.label(1), Some(0));
    }

    #[test]
    fn communities_errors() {
        let (g, _) = load("1 2\n").unwrap();
        let err = load_communities("9 0\n".as_bytes(), &g).unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(ref id) if id == "9"));
        let err = load_communities("1 0\n1 1\n".as_bytes(), &g).unwrap_err();
        assert!(matches!(err, Error::ConflictingLabel { .. }));
        // repeating the same label is fine
        load_communities("1 0\n1 0\n".as_bytes(), &g).unwrap();
    }

    #[test]
    fn community_csv_round_trip() {
        let (g, _) = load("a b\nb c\nd e\n").unwrap();
        let c = load_communities("a x\nb x\ne y\n".as_bytes(), &g).unwrap();
        let mut buf = Vec::new();
        c.write_csv(&g, &mut buf).unwrap();
        let back = load_communities(buf.as_slice(), &g).unwrap();
        assert_eq!(back, c);
    }
}

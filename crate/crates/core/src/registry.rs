//! Construction lookup by name, as used by the command line.

use crate::constructions::*;
use crate::design::{design_2_21_6_4, golay_s_5_8_24, s_3_6_22, s_4_7_23, sts15, Design};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Names accepted by [`build`]; `n` and `t` are positive integers.
pub const NAMES: &[&str] = &[
    "hoffman-singleton",
    "mclaughlin-complement",
    "gq39",
    "gq39-complement",
    "sims-gewirtz-complement",
    "petersen",
    "clebsch",
    "shrikhande",
    "triangular:n",
    "lattice:n",
    "kmultipartite:n:t",
    "cycle:n",
    "path:n",
    "sts15-block-graph",
    "sts15",
    "golay-s-5-8-24",
    "s-4-7-23",
    "s-3-6-22",
    "design-2-21-6-4",
];

#[derive(Clone, Debug)]
pub enum Artifact {
    Graph(Graph),
    Design(Design),
}

fn number(name: &str, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::UnknownName(name.to_string()))
}

pub fn build(name: &str) -> Result<Artifact> {
    let parts: Vec<&str> = name.split(':').collect();
    let graph = match parts[..] {
        ["hoffman-singleton"] => hoffman_singleton(),
        ["mclaughlin-complement"] => mclaughlin_complement(),
        ["gq39"] => gq39(),
        ["gq39-complement"] => gq39_complement(),
        ["sims-gewirtz-complement"] => sims_gewirtz_complement(),
        ["petersen"] => petersen(),
        ["clebsch"] => clebsch(),
        ["shrikhande"] => shrikhande(),
        ["sts15-block-graph"] => sts15().block_graph(1)?,
        ["triangular", n] => triangular(number(name, n)?)?,
        ["lattice", n] => lattice_graph(number(name, n)?)?,
        ["cycle", n] => match number(name, n)? {
            n if n >= 3 => Graph::cycle(n),
            _ => {
                return Err(Error::Precondition(
                    "a cycle needs at least 3 vertices".into(),
                ))
            }
        },
        ["path", n] => Graph::path(number(name, n)?),
        ["kmultipartite", n, t] => complete_multipartite(number(name, n)?, number(name, t)?)?,
        ["sts15"] => return Ok(Artifact::Design(sts15())),
        ["golay-s-5-8-24"] => return Ok(Artifact::Design(golay_s_5_8_24())),
        ["s-4-7-23"] => return Ok(Artifact::Design(s_4_7_23())),
        ["s-3-6-22"] => return Ok(Artifact::Design(s_3_6_22())),
        ["design-2-21-6-4"] => return Ok(Artifact::Design(design_2_21_6_4())),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(Artifact::Graph(graph))
}

pub fn build_graph(name: &str) -> Result<Graph> {
    match build(name)? {
        Artifact::Graph(g) => Ok(g),
        Artifact::Design(_) => Err(Error::Precondition(format!(
            "{name} is a design, not a graph"
        ))),
    }
}

pub fn build_design(name: &str) -> Result<Design> {
    match build(name)? {
        Artifact::Design(d) => Ok(d),
        Artifact::Graph(_) => Err(Error::Precondition(format!(
            "{name} is a graph, not a design"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(build_graph("petersen").unwrap().order(), 10);
        assert_eq!(build_graph("kmultipartite:3:2").unwrap().order(), 6);
        assert_eq!(build_graph("triangular:5").unwrap().order(), 10);
        assert_eq!(build_design("sts15").unwrap().block_count(), 35);
        assert!(matches!(build("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(build("lattice:x"), Err(Error::UnknownName(_))));
        assert!(build_graph("sts15").is_err());
        assert!(build("cycle:2").is_err());
    }
}

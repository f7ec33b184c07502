//! Graph sources: graph6 strings and files, edge lists, named constructors.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use rdalpha::graph::families;
use rdalpha::graph::{parse_edge_list, parse_graph6, parse_graph6_lines};
use rdalpha::{Error, Graph};

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// graph6 string, e.g. "Bg"
    #[arg(long, value_name = "STRING")]
    pub graph6: Option<String>,
    /// File holding one graph6 line (the first non-empty line is used)
    #[arg(long, value_name = "PATH")]
    pub graph6_file: Option<PathBuf>,
    /// Edge-list file: "n m" header, then m lines "u v"
    #[arg(long, value_name = "PATH")]
    pub edge_list: Option<PathBuf>,
    /// Named constructor NAME:PARAMS, e.g. complete:4, bipartite:2,3
    #[arg(long, value_name = "NAME:PARAMS")]
    pub construct: Option<String>,
}

/// A named family with its parameters, as given to `--construct`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construct {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Bipartite(usize, usize),
    Split(usize, usize),
    Wheel(usize),
    Turan(usize, usize),
    Multipartite(Vec<usize>),
    Kite(usize, usize),
    Petersen,
}

impl Construct {
    pub fn parse(spec: &str) -> Result<Construct, Error> {
        let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
        let nums: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidParameter(format!("bad parameter {p:?} in {spec:?}"))
                    })
                })
                .collect::<Result<_, _>>()?
        };
        let arity = |k: usize| -> Result<(), Error> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} takes {k} parameter(s), got {spec:?}"
                )))
            }
        };
        Ok(match name {
            "complete" => arity(1).map(|_| Construct::Complete(nums[0]))?,
            "path" => arity(1).map(|_| Construct::Path(nums[0]))?,
            "cycle" => arity(1).map(|_| Construct::Cycle(nums[0]))?,
            "star" => arity(1).map(|_| Construct::Star(nums[0]))?,
            "bipartite" => arity(2).map(|_| Construct::Bipartite(nums[0], nums[1]))?,
            "split" => arity(2).map(|_| Construct::Split(nums[0], nums[1]))?,
            "wheel" => arity(1).map(|_| Construct::Wheel(nums[0]))?,
            "turan" => arity(2).map(|_| Construct::Turan(nums[0], nums[1]))?,
            "kite" => arity(2).map(|_| Construct::Kite(nums[0], nums[1]))?,
            "petersen" => arity(0).map(|_| Construct::Petersen)?,
            "multipartite" => {
                if nums.is_empty() {
                    return Err(Error::InvalidParameter(
                        "multipartite needs part sizes".into(),
                    ));
                }
                Construct::Multipartite(nums)
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown constructor {name:?}"
                )))
            }
        })
    }

    pub fn build(&self) -> Result<Graph, Error> {
        match self {
            Construct::Complete(n) => families::complete(*n),
            Construct::Path(n) => families::path(*n),
            Construct::Cycle(n) => families::cycle(*n),
            Construct::Star(n) => families::star(*n),
            Construct::Bipartite(a, b) => families::complete_bipartite(*a, *b),
            Construct::Split(a, b) => families::complete_split(*a, *b),
            Construct::Wheel(n) => families::wheel(*n),
            Construct::Turan(n, r) => families::turan(*n, *r),
            Construct::Multipartite(parts) => families::complete_multipartite(parts),
            Construct::Kite(n, r) => rdalpha::extremal::build_kite(*n, *r),
            Construct::Petersen => Ok(families::petersen()),
        }
    }
}

pub struct Loaded {
    pub graph: Graph,
    pub construct: Option<Construct>,
}

#[derive(Debug)]
pub enum InputError {
    Io(PathBuf, std::io::Error),
    Graph(Error),
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Graph(e)
    }
}

impl GraphSource {
    pub fn load(&self) -> Result<Loaded, InputError> {
        let read = |p: &PathBuf| fs::read_to_string(p).map_err(|e| InputError::Io(p.clone(), e));
        if let Some(s) = &self.graph6 {
            return Ok(Loaded {
                graph: parse_graph6(s)?,
                construct: None,
            });
        }
        if let Some(p) = &self.graph6_file {
            let graphs = parse_graph6_lines(&read(p)?)?;
            let graph = graphs.into_iter().next().ok_or_else(|| Error::Graph6 {
                offset: 0,
                reason: "file holds no graph".into(),
            })?;
            return Ok(Loaded {
                graph,
                construct: None,
            });
        }
        if let Some(p) = &self.edge_list {
            return Ok(Loaded {
                graph: parse_edge_list(&read(p)?)?,
                construct: None,
            });
        }
        let spec = self.construct.as_deref().expect("clap enforces one source");
        let c = Construct::parse(spec)?;
        Ok(Loaded {
            graph: c.build()?,
            construct: Some(c),
        })
    }
}

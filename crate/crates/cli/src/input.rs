use std::fs;

use anyhow::{bail, Context, Result};
use combrep_core::linalg::QMatrix;
use combrep_core::partition::parse_padded;
use combrep_core::poset::{operator_from_json, sl2_chain, tensor_sl2, RankedPoset};
use combrep_core::repdiag::{gt_lattice, CartanData, ColoredDiagram};
use combrep_core::Partition;
use serde::de::DeserializeOwned;

use crate::args::{DiagramArgs, OperatorArgs, PosetSource, ShapeArgs};

/// Inline JSON when the argument starts with `{` or `[`, otherwise a path.
pub fn json_text(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with(['{', '[']) {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

pub fn read_json<T: DeserializeOwned>(arg: &str) -> Result<T> {
    let text = json_text(arg)?;
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {arg}"))
}

pub fn partition(s: &str) -> Result<Partition> {
    let parts = parse_padded(s)?;
    Ok(Partition::new(parts.into_iter().filter(|&p| p > 0).collect())?)
}

/// The partition and the number of variables: `--n` if given, otherwise the
/// length of the (possibly zero-padded) part list.
pub fn shape(args: &ShapeArgs) -> Result<(Partition, usize)> {
    let parts = parse_padded(&args.shape)?;
    let n = args.n.unwrap_or(parts.len());
    if n == 0 {
        bail!("cannot infer the number of variables from {:?}; pass --n", args.shape);
    }
    if parts.len() > n {
        bail!("shape {:?} has more than n = {n} entries", args.shape);
    }
    let lam = Partition::new(parts.into_iter().filter(|&p| p > 0).collect())?;
    Ok((lam, n))
}

/// `0-5`, `0,2,3` or a mix such as `0-2,4`.
pub fn ranks(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for piece in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match piece.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    bail!("empty rank range {piece}");
                }
                out.extend(a..=b);
            }
            None => out.push(piece.parse().with_context(|| format!("rank {piece:?}"))?),
        }
    }
    Ok(out)
}

type Sl2 = (RankedPoset, QMatrix, QMatrix);

fn boolean_sl2(n: usize) -> Sl2 {
    let mut acc = sl2_chain(0);
    for _ in 0..n {
        let one = sl2_chain(1);
        acc = tensor_sl2((&acc.0, &acc.1, &acc.2), (&one.0, &one.1, &one.2));
    }
    acc
}

/// The poset and, for built-in sl2 families, its standard operators.
pub fn poset(src: &PosetSource) -> Result<(RankedPoset, Option<(QMatrix, QMatrix)>)> {
    if let Some(path) = &src.poset {
        return Ok((RankedPoset::from_json_str(&json_text(path)?)?, None));
    }
    if let Some(r) = src.young {
        return Ok((RankedPoset::young(r), None));
    }
    let (p, x, y) = match (src.boolean, src.chain) {
        (Some(n), _) => boolean_sl2(n),
        (_, Some(k)) => sl2_chain(k),
        _ => bail!("no poset given"),
    };
    Ok((p, Some((x, y))))
}

/// Operators from `--x`/`--y`, falling back to the built-in ones.
pub fn sl2_structure(src: &PosetSource, ops: &OperatorArgs) -> Result<Sl2> {
    let (p, builtin) = poset(src)?;
    match (&ops.x, &ops.y, builtin) {
        (Some(x), Some(y), _) => {
            let x = operator_from_json(&read_json(x)?, p.len())?;
            let y = operator_from_json(&read_json(y)?, p.len())?;
            Ok((p, x, y))
        }
        (_, _, Some((x, y))) => Ok((p, x, y)),
        _ => bail!("this poset has no built-in sl2 structure; pass --x and --y"),
    }
}

pub fn diagram(args: &DiagramArgs) -> Result<(ColoredDiagram, CartanData)> {
    let d = match (&args.source.diagram, &args.source.gt_shape) {
        (Some(path), _) => ColoredDiagram::from_json_str(&json_text(path)?)?,
        (_, Some(s)) => {
            let n = args.n.context("--gt-shape needs --n")?;
            gt_lattice(&partition(s)?, n)?.0
        }
        _ => bail!("no diagram given"),
    };
    let cartan = match &args.cartan {
        Some(c) => CartanData::new(read_json(c)?)?,
        None => {
            let r = match (&args.source.gt_shape, args.n) {
                (Some(_), Some(n)) => n.saturating_sub(1),
                _ => d.num_colors(),
            };
            CartanData::type_a(r)
        }
    };
    Ok((d, cartan))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_lists() {
        assert_eq!(ranks("0-3").unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(ranks("0-1,4").unwrap(), vec![0, 1, 4]);
        assert!(ranks("3-1").is_err());
    }

    #[test]
    fn shapes_pad() {
        assert_eq!(shape_of("2,1,0,0", None).unwrap().1, 4);
        assert_eq!(shape_of("1", Some(2)).unwrap().1, 2);
        assert!(shape_of("1,1,1", Some(2)).is_err());
        assert!(shape_of("", None).is_err());
    }

    fn shape_of(shape: &str, n: Option<usize>) -> Result<(Partition, usize)> {
        super::shape(&ShapeArgs { shape: shape.into(), n })
    }

    #[test]
    fn boolean_lattice_sizes() {
        assert_eq!(boolean_sl2(3).0.len(), 8);
        assert_eq!(boolean_sl2(0).0.len(), 1);
    }
}

//! Row/column selectors for `chartable`.
//!
//! A selector is one of:
//! - `all` — every partition of the degree, most dominant first;
//! - `even-rows:N` / `even-cols:N` — the restricted families, unionable as
//!   a comma list (`even-rows:5,even-cols:10`);
//! - `ev:LAMBDA` — the distinct members of `Ev(LAMBDA)` in ascending order
//!   (the layout tables use);
//! - explicit partitions separated by `;` (partitions themselves contain
//!   commas), e.g. `10;8,2;6,4`.

use evsym_core::{
    ev_multiset, partitions_of, restricted_even_cols, restricted_even_rows, DegreeGuard, Error,
    Partition, Result,
};

pub fn parse_selector(spec: &str, degree: u32, guard: DegreeGuard) -> Result<Vec<Partition>> {
    let spec = spec.trim();
    if spec == "all" {
        return partitions_of(degree, guard);
    }
    if let Some(lambda_str) = spec.strip_prefix("ev:") {
        let lambda: Partition = lambda_str.parse()?;
        if 2 * lambda.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: 2 * lambda.degree(),
            });
        }
        let mut members: Vec<Partition> = ev_multiset(&lambda)
            .entries()
            .iter()
            .map(|e| e.partition.clone())
            .collect();
        members.sort();
        return Ok(members);
    }
    if spec.contains(';') {
        let mut out = Vec::new();
        for item in spec.split(';') {
            out.push(checked(item.parse()?, degree)?);
        }
        return Ok(out);
    }
    // A comma list where every chunk is a family is a union of families;
    // otherwise the whole string is one partition.
    let chunks: Vec<&str> = spec.split(',').collect();
    if chunks.iter().all(|c| is_family_chunk(c)) {
        let mut out = Vec::new();
        for chunk in chunks {
            let family = parse_family_chunk(chunk, degree, guard)?;
            for p in family {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        return Ok(out);
    }
    Ok(vec![checked(spec.parse()?, degree)?])
}

fn checked(p: Partition, degree: u32) -> Result<Partition> {
    if p.degree() != degree {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: p.degree(),
        });
    }
    Ok(p)
}

fn is_family_chunk(chunk: &str) -> bool {
    let chunk = chunk.trim();
    chunk.starts_with("even-rows:") || chunk.starts_with("even-cols:")
}

fn parse_family_chunk(chunk: &str, degree: u32, guard: DegreeGuard) -> Result<Vec<Partition>> {
    let chunk = chunk.trim();
    let parse_bound = |s: &str| -> Result<u32> {
        s.parse().map_err(|_| Error::Parse {
            input: chunk.to_string(),
            reason: "family bound is not a number".to_string(),
        })
    };
    if let Some(bound) = chunk.strip_prefix("even-rows:") {
        restricted_even_rows(degree, parse_bound(bound)?, guard)
    } else if let Some(bound) = chunk.strip_prefix("even-cols:") {
        restricted_even_cols(degree, parse_bound(bound)?, guard)
    } else {
        Err(Error::Parse {
            input: chunk.to_string(),
            reason: "unknown family".to_string(),
        })
    }
}

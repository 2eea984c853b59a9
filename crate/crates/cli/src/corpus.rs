//! `key=value,...` corpus selectors for `verify`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use swapcrit::campaign::RandomCorpusSpec;
use swapcrit::instances::{Model, TreeMethod};

fn parse_kv(spec: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("expected key=value, got `{item}`"))?;
        if out
            .insert(k.trim().to_string(), v.trim().to_string())
            .is_some()
        {
            bail!("key `{k}` given twice");
        }
    }
    Ok(out)
}

/// `a` or `a..b` (inclusive).
fn parse_range(value: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .with_context(|| format!("`{s}` is not a count"))
    };
    let (lo, hi) = match value.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(value)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range `{value}`");
    }
    Ok((lo, hi))
}

fn take<T: std::str::FromStr>(kv: &mut BTreeMap<String, String>, key: &str) -> Result<Option<T>>
where
    T::Err: std::fmt::Display,
{
    kv.remove(key)
        .map(|v| {
            v.parse::<T>()
                .map_err(|e| anyhow!("bad value for `{key}`: {e}"))
        })
        .transpose()
}

fn reject_rest(kv: BTreeMap<String, String>) -> Result<()> {
    if let Some(k) = kv.keys().next() {
        bail!("unknown key `{k}`");
    }
    Ok(())
}

/// `n=8..40,chords=2..40,count=300,seed=1[,model=..][,tree=..][,density=..]`.
/// `m=` gives a total edge count instead of `chords=` when `n` is fixed.
pub fn parse_random(spec: &str, default_seed: u64) -> Result<RandomCorpusSpec> {
    let mut kv = parse_kv(spec)?;
    let n = parse_range(&kv.remove("n").ok_or_else(|| anyhow!("`n=` is required"))?)?;
    if n.0 < 3 {
        bail!("n must be at least 3");
    }
    let chords = match (kv.remove("chords"), kv.remove("m")) {
        (Some(_), Some(_)) => bail!("give either chords= or m=, not both"),
        (Some(c), None) => parse_range(&c)?,
        (None, Some(m)) => {
            if n.0 != n.1 {
                bail!("m= needs a fixed n");
            }
            let (lo, hi) = parse_range(&m)?;
            if lo < n.0 {
                bail!("m must be at least n for a cycle plus chords");
            }
            (lo - n.0, hi - n.0)
        }
        (None, None) => (0, 0),
    };
    let model = take::<Model>(&mut kv, "model")?.unwrap_or(Model::CycleChords);
    let tree = take::<TreeMethod>(&mut kv, "tree")?;
    let density = take::<f64>(&mut kv, "density")?.unwrap_or(0.15);
    let count = take::<usize>(&mut kv, "count")?.unwrap_or(100);
    let seed = take::<u64>(&mut kv, "seed")?.unwrap_or(default_seed);
    reject_rest(kv)?;
    Ok(RandomCorpusSpec {
        model,
        n,
        chords,
        density,
        tree,
        count,
        seed,
    })
}

/// `n=5[,cap=50]`.
pub fn parse_exhaustive(spec: &str) -> Result<(usize, usize)> {
    let mut kv = parse_kv(spec)?;
    let n = take::<usize>(&mut kv, "n")?.ok_or_else(|| anyhow!("`n=` is required"))?;
    let cap = take::<usize>(&mut kv, "cap")?.unwrap_or(0);
    reject_rest(kv)?;
    if n > swapcrit::instances::MAX_ENUMERATION_N {
        bail!(
            "exhaustive mode supports n <= {}",
            swapcrit::instances::MAX_ENUMERATION_N
        );
    }
    Ok((n, cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_selector() {
        let s = parse_random("n=8..40,chords=2..40,count=300,seed=9", 0).unwrap();
        assert_eq!((s.n, s.chords, s.count, s.seed), ((8, 40), (2, 40), 300, 9));
        let s = parse_random("n=10,m=14,count=3", 5).unwrap();
        assert_eq!((s.chords, s.seed), ((4, 4), 5));
        assert!(parse_random("n=8..10,m=14", 0).is_err());
        assert!(parse_random("n=8,bogus=1", 0).is_err());
        assert!(parse_random("count=3", 0).is_err());
    }

    #[test]
    fn exhaustive_selector() {
        assert_eq!(parse_exhaustive("n=5,cap=50").unwrap(), (5, 50));
        assert_eq!(parse_exhaustive("n=4").unwrap(), (4, 0));
        assert!(parse_exhaustive("n=7").is_err());
    }
}

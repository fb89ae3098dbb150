//! Golden test vectors: JSON lists of `{scheme, key, input, output}`.
//!
//! Integers are decimal, blocks are four hex digits, bit strings are `0`/`1`
//! text. [`compute`] is the reference evaluation of every scheme.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use qkdlab_core::classical::{
    dh_shared, ecb_enc, mod_exp, otp_enc, rsa_dec, rsa_enc, stream_enc, BitString, CounterPrg,
    DhGroup, FeistelCipher, PolyUhf, Prg, RsaPublicKey, RsaSecretKey,
};
use qkdlab_core::seed::rng_from_seed;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestVector {
    pub scheme: String,
    pub key: String,
    pub input: String,
    pub output: String,
}

impl TestVector {
    /// Recomputes the output and compares it with the stored one.
    pub fn verify(&self) -> Result<()> {
        let actual = compute(&self.scheme, &self.key, &self.input)?;
        if actual != self.output {
            bail!(
                "{} key={} input={}: expected {}, got {actual}",
                self.scheme,
                self.key,
                self.input,
                self.output
            );
        }
        Ok(())
    }
}

fn hex16(s: &str) -> Result<u16> {
    u16::from_str_radix(s, 16).with_context(|| format!("bad hex block {s:?}"))
}

fn int(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .with_context(|| format!("bad integer {s:?}"))
}

fn bits(s: &str) -> Result<BitString> {
    Ok(s.parse()?)
}

/// `"a=1;b=2"` → values in order of `names`.
fn fields(s: &str, names: &[&str]) -> Result<Vec<u64>> {
    let pairs: Vec<(&str, &str)> = s.split(';').filter_map(|p| p.split_once('=')).collect();
    names
        .iter()
        .map(|n| {
            let (_, v) = pairs
                .iter()
                .find(|(k, _)| k == n)
                .ok_or_else(|| anyhow!("missing {n} in {s:?}"))?;
            int(v)
        })
        .collect()
}

fn feistel(scheme: &str) -> Result<Option<FeistelCipher>> {
    let Some(rest) = scheme.strip_prefix("feistel-") else {
        return Ok(None);
    };
    let rounds = rest.strip_suffix("-dec").unwrap_or(rest);
    Ok(Some(FeistelCipher::new(int(rounds)? as usize)?))
}

/// Reference output for one vector.
pub fn compute(scheme: &str, key: &str, input: &str) -> Result<String> {
    if let Some(cipher) = feistel(scheme)? {
        let (k, b) = (hex16(key)?, hex16(input)?);
        let out = if scheme.ends_with("-dec") {
            cipher.decrypt(k, b)
        } else {
            cipher.encrypt(k, b)
        };
        return Ok(format!("{out:04x}"));
    }
    if let Some(rest) = scheme.strip_prefix("uhf-") {
        let (p, l) = rest
            .split_once('-')
            .ok_or_else(|| anyhow!("bad scheme {scheme:?}"))?;
        let uhf = PolyUhf::new(int(p)?, int(l)? as usize)?;
        let m = input.split(',').map(int).collect::<Result<Vec<_>>>()?;
        return Ok(uhf.eval(int(key)?, &m)?.to_string());
    }
    if let Some(rest) = scheme.strip_prefix("dh-") {
        let (p, g) = rest
            .split_once('-')
            .ok_or_else(|| anyhow!("bad scheme {scheme:?}"))?;
        let group = DhGroup::new(int(p)?, int(g)?)?;
        return Ok(dh_shared(&group, int(key)?, int(input)?)?.to_string());
    }
    let out = match scheme {
        "otp" => otp_enc(&bits(key)?, &bits(input)?)?.to_string(),
        "ecb" => {
            let blocks = input.split(' ').map(hex16).collect::<Result<Vec<_>>>()?;
            let c = ecb_enc(&FeistelCipher::toy(), hex16(key)?, &blocks)?;
            c.iter()
                .map(|b| format!("{b:04x}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
        "counter-prg" => {
            let prg = CounterPrg::new(int(input)? as usize)?;
            prg.expand(&BitString::from_u64(hex16(key)? as u64, prg.seed_len()))?
                .to_string()
        }
        "stream" => {
            let prg = CounterPrg::new(64)?;
            stream_enc(
                &prg,
                &BitString::from_u64(hex16(key)? as u64, 16),
                &bits(input)?,
            )?
            .to_string()
        }
        "rsa-enc" => {
            let v = fields(key, &["n", "e"])?;
            rsa_enc(&RsaPublicKey { n: v[0], e: v[1] }, int(input)?)?.to_string()
        }
        "rsa-dec" => {
            let v = fields(key, &["n", "d"])?;
            rsa_dec(&RsaSecretKey { n: v[0], d: v[1] }, int(input)?)?.to_string()
        }
        "mod-exp" => {
            let (base, exp) = input
                .split_once('^')
                .ok_or_else(|| anyhow!("expected base^exp, got {input:?}"))?;
            mod_exp(int(base)?, int(exp)?, int(key)?)?.to_string()
        }
        other => bail!("unknown scheme {other:?}"),
    };
    Ok(out)
}

fn vector(scheme: &str, key: String, input: String) -> TestVector {
    let output = compute(scheme, &key, &input).expect("generated vectors are valid");
    TestVector {
        scheme: scheme.to_string(),
        key,
        input,
        output,
    }
}

/// Fixed anchors plus seeded random cases for every scheme.
pub fn generate(seed: u64) -> Vec<TestVector> {
    let mut rng = rng_from_seed(seed);
    let mut out = vec![
        vector("otp", "0000".into(), "1011".into()),
        vector("otp", "1010".into(), "0110".into()),
        vector("feistel-4", "3a7c".into(), "0000".into()),
        vector("rsa-enc", "n=3233;e=17".into(), "65".into()),
        vector("rsa-dec", "n=3233;d=2753".into(), "2790".into()),
        vector("dh-23-5", "4".into(), "10".into()),
        vector("dh-23-5", "3".into(), "4".into()),
        vector("uhf-7-3", "3".into(), "1,2".into()),
        vector("mod-exp", "23".into(), "5^4".into()),
    ];
    for _ in 0..8 {
        let len = rng.gen_range(1..=16);
        let k = BitString::random(len, &mut rng).to_string();
        let m = BitString::random(len, &mut rng).to_string();
        out.push(vector("otp", k, m));
    }
    for scheme in ["feistel-1", "feistel-4", "feistel-4-dec"] {
        for _ in 0..8 {
            out.push(vector(
                scheme,
                format!("{:04x}", rng.gen::<u16>()),
                format!("{:04x}", rng.gen::<u16>()),
            ));
        }
    }
    for _ in 0..4 {
        let blocks: Vec<String> = (0..4)
            .map(|_| format!("{:04x}", rng.gen::<u16>()))
            .collect();
        out.push(vector(
            "ecb",
            format!("{:04x}", rng.gen::<u16>()),
            blocks.join(" "),
        ));
    }
    for len in [17, 40, 64] {
        out.push(vector(
            "counter-prg",
            format!("{:04x}", rng.gen::<u16>()),
            len.to_string(),
        ));
    }
    for _ in 0..4 {
        let len = rng.gen_range(1..=64);
        out.push(vector(
            "stream",
            format!("{:04x}", rng.gen::<u16>()),
            BitString::random(len, &mut rng).to_string(),
        ));
    }
    for _ in 0..6 {
        let m: Vec<String> = (0..3)
            .map(|_| rng.gen_range(0..251u64).to_string())
            .collect();
        out.push(vector(
            "uhf-251-3",
            rng.gen_range(0..251u64).to_string(),
            m.join(","),
        ));
    }
    for _ in 0..4 {
        out.push(vector(
            "rsa-enc",
            "n=3233;e=17".into(),
            rng.gen_range(0..3233u64).to_string(),
        ));
    }
    for _ in 0..4 {
        let (a, v) = (
            rng.gen_range(1..=2_147_483_645u64),
            rng.gen_range(1..2_147_483_647u64),
        );
        out.push(vector("dh-2147483647-7", a.to_string(), v.to_string()));
    }
    out
}

pub fn load(path: &Path) -> Result<Vec<TestVector>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save(path: &Path, vectors: &[TestVector]) -> Result<()> {
    let mut text = serde_json::to_string_pretty(vectors)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

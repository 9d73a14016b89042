//! JSON encodings for exact data: cyclotomic numbers, map parameters,
//! and plane blowup ledgers. A cyclotomic number is encoded as
//! {"order": n, "num": [...], "den": d} with power-basis coordinates
//! num[i]/den; integers may be JSON numbers or decimal strings.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::CycNum;
use crate::birmap::MapParameters;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CodecError {
    #[error("malformed value: {0}")]
    Malformed(String),
}

fn bigint_from_value(v: &Value) -> Result<BigInt, CodecError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else {
                Err(CodecError::Malformed(format!(
                    "integer out of range: {}",
                    n
                )))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| CodecError::Malformed(format!("bad integer string: {}", s))),
        _ => Err(CodecError::Malformed(format!("expected integer, got {}", v))),
    }
}

fn bigint_to_value(v: &BigInt) -> Value {
    if let Ok(i) = i64::try_from(v.clone()) {
        json!(i)
    } else {
        json!(v.to_string())
    }
}

pub fn cyc_to_json(c: &CycNum) -> Value {
    let mut den = BigInt::one();
    for coord in c.coords() {
        den = num::integer::lcm(den, coord.denom().clone());
    }
    let num: Vec<Value> = c
        .coords()
        .iter()
        .map(|coord| bigint_to_value(&(coord * BigRational::from(den.clone())).to_integer()))
        .collect();
    json!({
        "order": c.order(),
        "num": num,
        "den": bigint_to_value(&den),
    })
}

pub fn cyc_from_json(v: &Value) -> Result<CycNum, CodecError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CodecError::Malformed("expected object".into()))?;
    let order = obj
        .get("order")
        .and_then(|o| o.as_u64())
        .ok_or_else(|| CodecError::Malformed("missing order".into()))? as u32;
    let num = obj
        .get("num")
        .and_then(|n| n.as_array())
        .ok_or_else(|| CodecError::Malformed("missing num array".into()))?;
    let den = match obj.get("den") {
        Some(d) => bigint_from_value(d)?,
        None => BigInt::one(),
    };
    if den == BigInt::from(0) {
        return Err(CodecError::Malformed("zero denominator".into()));
    }
    let coords: Result<Vec<BigRational>, CodecError> = num
        .iter()
        .map(|x| Ok(BigRational::new(bigint_from_value(x)?, den.clone())))
        .collect();
    CycNum::new(order, coords?).map_err(|e| CodecError::Malformed(e.to_string()))
}

/// Parameter file: {"cyclotomic_order": n, "alpha": [4 values],
/// "beta": [4 values]} where each value is a cyclotomic-number object (or
/// a bare integer, read at order 1).
pub fn params_to_json(p: &MapParameters) -> Value {
    let order = p
        .alpha
        .iter()
        .chain(p.beta.iter())
        .map(|c| c.order())
        .fold(1, crate::algebra::cyclotomic::lcm_u32);
    json!({
        "cyclotomic_order": order,
        "alpha": p.alpha.iter().map(cyc_to_json).collect::<Vec<_>>(),
        "beta": p.beta.iter().map(cyc_to_json).collect::<Vec<_>>(),
    })
}

fn cyc_value_flexible(v: &Value) -> Result<CycNum, CodecError> {
    match v {
        Value::Number(_) | Value::String(_) => {
            let i = bigint_from_value(v)?;
            Ok(CycNum::from_rational(BigRational::from(i)))
        }
        _ => cyc_from_json(v),
    }
}

pub fn params_from_json(v: &Value) -> Result<MapParameters, CodecError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CodecError::Malformed("expected object".into()))?;
    let read4 = |key: &str, obj: &Map<String, Value>| -> Result<[CycNum; 4], CodecError> {
        let arr = obj
            .get(key)
            .and_then(|a| a.as_array())
            .ok_or_else(|| CodecError::Malformed(format!("missing {}", key)))?;
        if arr.len() != 4 {
            return Err(CodecError::Malformed(format!("{} must have 4 entries", key)));
        }
        let mut out = Vec::with_capacity(4);
        for x in arr {
            out.push(cyc_value_flexible(x)?);
        }
        Ok([
            out[0].clone(),
            out[1].clone(),
            out[2].clone(),
            out[3].clone(),
        ])
    };
    let alpha = read4("alpha", obj)?;
    let beta = read4("beta", obj)?;
    MapParameters::new(alpha, beta).map_err(|e| CodecError::Malformed(e.to_string()))
}

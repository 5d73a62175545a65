//! JSON descriptors for ring contexts and coordinate formats for algebra
//! elements.
//!
//! A ring is described by a small JSON object:
//!
//! ```text
//! {"kind":"Z"}
//! {"kind":"Q"}
//! {"kind":"Fp","p":5}
//! {"base":B,"kind":"poly","vars":["x1","y1"]}
//! {"base":B,"kind":"quot","modulus":"x1*y1 - 1"}
//! ```
//!
//! where `B` is itself a ring descriptor and the modulus is polynomial
//! text in the variables of the base ring. Emitted objects are compact,
//! with keys in sorted order, so the descriptor of a ring is a canonical
//! byte string: parsing a descriptor and serializing the result returns
//! the canonical form, and canonical forms round-trip identically.
//!
//! Split octonions are carried as the four entries of each two by two
//! block in reading order, Zorn elements as the two diagonal scalars plus
//! the four ambient coordinates of the vector and covector parts. All
//! entries are polynomial text in the element's own ring, and the object
//! embeds the ring descriptor so a file is self-describing.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::oct::SplitOct;
use crate::parse::parse_elt;
use crate::ring::{CtxNode, RingCtx, RingElt};
use crate::zorn::{ZornAlgebra, ZornElt};

/// Serialize a ring context as a JSON value.
pub fn ring_to_value(ctx: &RingCtx) -> Value {
    match ctx.node() {
        CtxNode::Integers => json!({ "kind": "Z" }),
        CtxNode::Rationals => json!({ "kind": "Q" }),
        CtxNode::PrimeField(p) => json!({ "kind": "Fp", "p": p }),
        CtxNode::Polynomial { base, vars } => {
            json!({ "base": ring_to_value(base), "kind": "poly", "vars": vars })
        }
        CtxNode::Quotient { base, modulus } => {
            let scalar = base.scalar_kind().unwrap();
            let vars = base.vars().unwrap();
            json!({
                "base": ring_to_value(base),
                "kind": "quot",
                "modulus": modulus.to_text(scalar, vars),
            })
        }
    }
}

/// Canonical descriptor string for a ring context.
pub fn ring_descriptor(ctx: &RingCtx) -> String {
    ring_to_value(ctx).to_string()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::ParseError { pos: 0, msg: msg.into() }
}

fn obj_of<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what} must be a JSON object")))
}

fn str_field<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v str> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| bad(format!("missing or non-string field {key:?}")))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(bad(format!("unexpected field {key:?}")));
        }
    }
    Ok(())
}

/// Rebuild a ring context from a descriptor JSON value.
pub fn parse_ring_value(v: &Value) -> Result<RingCtx> {
    let obj = obj_of(v, "a ring descriptor")?;
    let kind = str_field(obj, "kind")?;
    match kind {
        "Z" => {
            check_keys(obj, &["kind"])?;
            Ok(RingCtx::integers())
        }
        "Q" => {
            check_keys(obj, &["kind"])?;
            Ok(RingCtx::rationals())
        }
        "Fp" => {
            check_keys(obj, &["kind", "p"])?;
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("field \"p\" must be an unsigned integer"))?;
            RingCtx::prime_field(p)
        }
        "poly" => {
            check_keys(obj, &["base", "kind", "vars"])?;
            let base =
                parse_ring_value(obj.get("base").ok_or_else(|| bad("missing field \"base\""))?)?;
            let vars = obj
                .get("vars")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("field \"vars\" must be an array"))?;
            let names: Vec<&str> = vars
                .iter()
                .map(|x| x.as_str().ok_or_else(|| bad("variable names must be strings")))
                .collect::<Result<_>>()?;
            RingCtx::polynomial(&base, &names)
        }
        "quot" => {
            check_keys(obj, &["base", "kind", "modulus"])?;
            let base =
                parse_ring_value(obj.get("base").ok_or_else(|| bad("missing field \"base\""))?)?;
            let modulus = parse_elt(str_field(obj, "modulus")?, &base)?;
            RingCtx::quotient(&base, &modulus)
        }
        other => Err(bad(format!("unknown ring kind {other:?}"))),
    }
}

fn json_error_pos(text: &str, err: &serde_json::Error) -> usize {
    let (line, column) = (err.line(), err.column());
    let mut offset = 0usize;
    for (i, l) in text.split('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1);
        }
        offset += l.len() + 1;
    }
    text.len()
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::ParseError { pos: json_error_pos(text, &e), msg: e.to_string() })
}

/// Rebuild a ring context from descriptor text.
pub fn parse_ring_descriptor(text: &str) -> Result<RingCtx> {
    parse_ring_value(&parse_json(text)?)
}

fn elts_to_value(elts: &[RingElt]) -> Value {
    Value::Array(elts.iter().map(|e| Value::String(e.to_text())).collect())
}

fn parse_elt_field(v: &Value, ctx: &RingCtx) -> Result<RingElt> {
    let text = v.as_str().ok_or_else(|| bad("coordinates must be polynomial text strings"))?;
    parse_elt(text, ctx)
}

fn parse_elt_array(v: &Value, ctx: &RingCtx, len: usize) -> Result<Vec<RingElt>> {
    let arr = v.as_array().ok_or_else(|| bad("expected a JSON array of coordinates"))?;
    if arr.len() != len {
        return Err(Error::LengthMismatch { expected: len, got: arr.len() });
    }
    arr.iter().map(|x| parse_elt_field(x, ctx)).collect()
}

/// Serialize a split octonion with its ring descriptor.
pub fn oct_to_value(o: &SplitOct) -> Value {
    let c = o.coords();
    json!({
        "m1": elts_to_value(&c[0..4]),
        "m2": elts_to_value(&c[4..8]),
        "ring": ring_to_value(o.ctx()),
    })
}

/// Canonical JSON text for a split octonion.
pub fn oct_json(o: &SplitOct) -> String {
    oct_to_value(o).to_string()
}

/// Rebuild a split octonion from a JSON value; the ring is read from the
/// embedded descriptor.
pub fn parse_oct_value(v: &Value) -> Result<SplitOct> {
    let obj = obj_of(v, "a split octonion")?;
    check_keys(obj, &["m1", "m2", "ring"])?;
    let ctx =
        parse_ring_value(obj.get("ring").ok_or_else(|| bad("missing field \"ring\""))?)?;
    let m1 = parse_elt_array(obj.get("m1").ok_or_else(|| bad("missing field \"m1\""))?, &ctx, 4)?;
    let m2 = parse_elt_array(obj.get("m2").ok_or_else(|| bad("missing field \"m2\""))?, &ctx, 4)?;
    let coords: Vec<RingElt> = m1.into_iter().chain(m2).collect();
    SplitOct::from_coords(&ctx, &coords)
}

/// Rebuild a split octonion from JSON text.
pub fn parse_oct_json(text: &str) -> Result<SplitOct> {
    parse_oct_value(&parse_json(text)?)
}

/// Serialize a Zorn element with its ring descriptor. Coordinates are the
/// four ambient entries of the vector and covector parts.
pub fn zorn_to_value(u: &ZornElt) -> Value {
    json!({
        "a1": u.a1.to_text(),
        "a2": u.a2.to_text(),
        "ring": ring_to_value(u.a1.ctx()),
        "xminus": elts_to_value(&u.xminus),
        "xplus": elts_to_value(&u.xplus),
    })
}

/// Canonical JSON text for a Zorn element.
pub fn zorn_json(u: &ZornElt) -> String {
    zorn_to_value(u).to_string()
}

/// Rebuild a Zorn element of `alg` from a JSON value. The embedded ring
/// descriptor must match the algebra's ring, and the coordinates must
/// satisfy the algebra's module membership constraints.
pub fn parse_zorn_value(alg: &ZornAlgebra, v: &Value) -> Result<ZornElt> {
    let obj = obj_of(v, "a Zorn element")?;
    check_keys(obj, &["a1", "a2", "ring", "xminus", "xplus"])?;
    let ctx =
        parse_ring_value(obj.get("ring").ok_or_else(|| bad("missing field \"ring\""))?)?;
    if &ctx != alg.ctx() {
        return Err(Error::CtxMismatch);
    }
    let a1 = parse_elt_field(obj.get("a1").ok_or_else(|| bad("missing field \"a1\""))?, &ctx)?;
    let a2 = parse_elt_field(obj.get("a2").ok_or_else(|| bad("missing field \"a2\""))?, &ctx)?;
    let xplus =
        parse_elt_array(obj.get("xplus").ok_or_else(|| bad("missing field \"xplus\""))?, &ctx, 4)?;
    let xminus = parse_elt_array(
        obj.get("xminus").ok_or_else(|| bad("missing field \"xminus\""))?,
        &ctx,
        4,
    )?;
    alg.elt(a1, xplus, xminus, a2)
}

/// Rebuild a Zorn element of `alg` from JSON text.
pub fn parse_zorn_json(alg: &ZornAlgebra, text: &str) -> Result<ZornElt> {
    parse_zorn_value(alg, &parse_json(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quadric_ring;
    use crate::rng::SplitMix64;

    #[test]
    fn descriptors_round_trip_canonically() {
        let q7 = quadric_ring(7, &RingCtx::rationals()).unwrap();
        let cases = [
            RingCtx::integers(),
            RingCtx::rationals(),
            RingCtx::prime_field(5).unwrap(),
            RingCtx::polynomial(&RingCtx::prime_field(3).unwrap(), &["x", "y"]).unwrap(),
            quadric_ring(6, &RingCtx::prime_field(7).unwrap()).unwrap(),
            q7.clone(),
        ];
        for ctx in &cases {
            let text = ring_descriptor(ctx);
            let back = parse_ring_descriptor(&text).unwrap();
            assert_eq!(&back, ctx);
            assert_eq!(ring_descriptor(&back), text);
        }
        let text = ring_descriptor(&q7);
        assert!(text.starts_with("{\"base\":{\"base\":{\"kind\":\"Q\"}"));
        assert!(text.contains("\"kind\":\"quot\""));
        assert!(text.contains("- 1\""));
    }

    #[test]
    fn whitespace_variants_normalize() {
        let spaced = "{ \"kind\" : \"Fp\" ,\n  \"p\" : 11 }";
        let ctx = parse_ring_descriptor(spaced).unwrap();
        assert_eq!(ring_descriptor(&ctx), "{\"kind\":\"Fp\",\"p\":11}");
    }

    #[test]
    fn descriptor_errors() {
        match parse_ring_descriptor("{\"kind\":\"Fp\",\"p\":4}") {
            Err(Error::InvalidPrime(4)) => {}
            other => panic!("expected InvalidPrime, got {other:?}"),
        }
        match parse_ring_descriptor("{\"kind\":\"Fq\"}") {
            Err(Error::ParseError { .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_ring_descriptor("{\"kind\":\"Z\",\"extra\":1}") {
            Err(Error::ParseError { .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_ring_descriptor("{\"kind\":\"Z\"") {
            Err(Error::ParseError { pos, .. }) => assert!(pos > 0),
            other => panic!("expected a parse error, got {other:?}"),
        }
        let bad_modulus = "{\"base\":{\"base\":{\"kind\":\"Q\"},\"kind\":\"poly\",\
                           \"vars\":[\"x\"]},\"kind\":\"quot\",\"modulus\":\"y - 1\"}";
        match parse_ring_descriptor(bad_modulus) {
            Err(Error::ParseError { .. }) => {}
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn octonions_round_trip() {
        let ring = quadric_ring(6, &RingCtx::rationals()).unwrap();
        let mut rng = SplitMix64::new(9);
        for _ in 0..5 {
            let coords: Vec<RingElt> =
                (0..8).map(|_| ring.sample(&mut rng, 2, 1, 3)).collect();
            let o = SplitOct::from_coords(&ring, &coords).unwrap();
            let text = oct_json(&o);
            let back = parse_oct_json(&text).unwrap();
            assert_eq!(back, o);
            assert_eq!(oct_json(&back), text);
        }
    }

    #[test]
    fn zorn_elements_round_trip_in_the_free_case() {
        let f5 = RingCtx::prime_field(5).unwrap();
        let alg = ZornAlgebra::free(&f5);
        let u = alg
            .elt_free(
                f5.from_i64(2),
                [f5.from_i64(1), f5.from_i64(0), f5.from_i64(3)],
                [f5.from_i64(4), f5.from_i64(2), f5.from_i64(0)],
                f5.from_i64(1),
            )
            .unwrap();
        let text = zorn_json(&u);
        let back = parse_zorn_json(&alg, &text).unwrap();
        assert_eq!(back, u);
        assert_eq!(zorn_json(&back), text);
    }

    #[test]
    fn zorn_parsing_enforces_membership_and_ring_match() {
        let q = RingCtx::rationals();
        let ring = quadric_ring(7, &q).unwrap();
        let row: Vec<RingElt> =
            ["x1", "x2", "x3", "x4"].iter().map(|v| ring.var(v).unwrap()).collect();
        let wit: Vec<RingElt> =
            ["y1", "y2", "y3", "y4"].iter().map(|v| ring.var(v).unwrap()).collect();
        let urow = crate::zorn::UnimodularRow::new(row, wit).unwrap();
        let alg = ZornAlgebra::new(crate::zorn::Module3::from_row(urow));
        let module = alg.module().clone();
        let xplus = module
            .project_vector(&[ring.var("y1").unwrap(), ring.zero(), ring.zero(), ring.zero()])
            .unwrap();
        let xminus = module
            .project_covector(&[ring.var("x1").unwrap(), ring.zero(), ring.zero(), ring.zero()])
            .unwrap();
        let u = alg.elt(ring.one(), xplus, xminus, ring.from_i64(2)).unwrap();
        let text = zorn_json(&u);
        let back = parse_zorn_json(&alg, &text).unwrap();
        assert_eq!(back, u);

        // vector part living outside the module is rejected
        let raw = json!({
            "a1": "0",
            "a2": "0",
            "ring": ring_to_value(&ring),
            "xminus": ["0", "0", "0", "0"],
            "xplus": ["1", "0", "0", "0"],
        });
        match parse_zorn_value(&alg, &raw) {
            Err(Error::NotInModule) => {}
            other => panic!("expected NotInModule, got {other:?}"),
        }

        // descriptor for a different ring is rejected
        let f5 = RingCtx::prime_field(5).unwrap();
        let other = ZornAlgebra::free(&f5);
        match parse_zorn_json(&other, &text) {
            Err(Error::CtxMismatch) => {}
            other => panic!("expected CtxMismatch, got {other:?}"),
        }
    }
}

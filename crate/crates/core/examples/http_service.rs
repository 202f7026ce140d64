//! Drive the HTTP service in process: create a problem, edit an entry with
//! reciprocal mirroring, add a constraint and solve.
//!
//! Run with `cargo run --example http_service`. Use `troprate serve` for a
//! real listener.

use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use tropical_rating::service::{router, Store};

async fn call(store: &Arc<Store>, method: Method, uri: &str, body: Value) -> Value {
    let request = Request::builder()
        .method(method.clone())
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .expect("valid request");
    let response = router(store.clone()).oneshot(request).await.expect("infallible");
    let status = response.status();
    let bytes = response.into_body().collect().await.expect("body").to_bytes();
    let value: Value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    println!("{method} {uri} -> {status}");
    value
}

#[tokio::main]
async fn main() -> tropical_rating::Result<()> {
    let store = Arc::new(Store::open(None)?);
    let problem = json!({
        "scale": "max-times",
        "labels": ["a", "b", "c"],
        "auto_reciprocal": true,
        "matrices": [[["1", "2", "4"], ["1/2", "1", "2"], ["1/4", "1/2", "1"]]]
    });
    let created = call(&store, Method::POST, "/api/problems", problem).await;
    let id = created["id"].as_str().expect("id").to_string();

    let solved = call(&store, Method::POST, &format!("/api/problems/{id}/solve?normalize=sum"), json!({})).await;
    let result = &solved["result"];
    println!("  minimum {}, ranking {}", result["minimum"], result["candidates"][0]["ranking_text"]);

    let edit = json!({"i": 0, "j": 2, "value": "8", "expected_revision": 0});
    let edited = call(&store, Method::PUT, &format!("/api/problems/{id}/entry"), edit).await;
    println!("  revision {}", edited["revision"]);

    let constraint = json!({"i": 2, "j": 1, "value": "1"});
    call(&store, Method::PUT, &format!("/api/problems/{id}/constraint"), constraint).await;

    let solved = call(&store, Method::POST, &format!("/api/problems/{id}/solve"), json!({})).await;
    let result = &solved["result"];
    println!("  mode {}, minimum {}", result["mode"], result["minimum"]);
    for candidate in result["candidates"].as_array().into_iter().flatten() {
        println!("  scores {}", candidate["scores"]);
    }
    Ok(())
}

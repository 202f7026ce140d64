//! HTTP/JSON facade over the rating engine.
//!
//! | method | path                          | body                                      |
//! |--------|-------------------------------|-------------------------------------------|
//! | POST   | `/api/problems`               | problem JSON                              |
//! | GET    | `/api/problems/{id}`          |                                           |
//! | PUT    | `/api/problems/{id}/entry`    | `{i, j, value, matrix?, expected_revision?}` |
//! | PUT    | `/api/problems/{id}/constraint` | `{i, j, value, expected_revision?}`     |
//! | POST   | `/api/problems/{id}/solve`    | optional `?normalize=sum\|max\|none`      |
//! | POST   | `/api/solve`                  | problem JSON, solved without storing it   |
//!
//! Indices are 0-based. Every mutation bumps the problem's revision; a
//! mutation carrying a stale `expected_revision` is rejected with 409.

mod store;

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};
use tower_http::cors::CorsLayer;

use crate::error::Error;
use crate::io::{result_to_json, Cell, ProblemDoc};
use crate::rating::NormalizeMode;
use crate::semifield::AnyScalar;

pub use store::{Session, Store};

/// Failure of a request, rendered as `{"error", "kind", ...}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: Value,
}

impl ApiError {
    fn new(status: StatusCode, kind: &str, message: impl Into<String>) -> Self {
        Self {
            status,
            body: json!({ "error": message.into(), "kind": kind }),
        }
    }

    fn not_found(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "not-found", format!("no problem with id {id}"))
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match &e {
            Error::Infeasible {
                value,
                cycle,
                cycle_value,
            } => Self {
                status: StatusCode::UNPROCESSABLE_ENTITY,
                body: json!({
                    "error": e.to_string(),
                    "kind": "infeasible",
                    "trace": value,
                    "cycle": cycle,
                    "cycle_value": cycle_value,
                }),
            },
            Error::Io(_) => Self::new(StatusCode::INTERNAL_SERVER_ERROR, "io", e.to_string()),
            _ if e.is_usage() => Self::new(StatusCode::BAD_REQUEST, "bad-request", e.to_string()),
            _ => Self::new(StatusCode::UNPROCESSABLE_ENTITY, "domain", e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

/// Parses a JSON body, mapping every rejection to a 400 with our error shape.
fn body<T: serde::de::DeserializeOwned>(text: &str) -> ApiResult<T> {
    serde_json::from_str(text).map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "bad-request", e.to_string()))
}

pub fn router(store: Arc<Store>) -> Router {
    Router::new()
        .route("/api/problems", post(create))
        .route("/api/problems/{id}", get(fetch))
        .route("/api/problems/{id}/entry", put(set_entry))
        .route("/api/problems/{id}/constraint", put(set_constraint))
        .route("/api/problems/{id}/solve", post(solve))
        .route("/api/solve", post(solve_once))
        .layer(CorsLayer::permissive())
        .with_state(store)
}

/// Serves until the process is stopped.
pub async fn serve(addr: SocketAddr, persist: Option<PathBuf>) -> crate::Result<()> {
    let store = Arc::new(Store::open(persist)?);
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|e| Error::Io(format!("cannot bind {addr}: {e}")))?;
    eprintln!("listening on http://{}", listener.local_addr().map_err(|e| Error::Io(e.to_string()))?);
    axum::serve(listener, router(store))
        .await
        .map_err(|e| Error::Io(e.to_string()))
}

async fn create(State(store): State<Arc<Store>>, text: String) -> ApiResult<(StatusCode, Json<Value>)> {
    let doc: ProblemDoc = body(&text)?;
    doc.validate()?;
    let (id, revision) = store.insert(doc)?;
    Ok((StatusCode::CREATED, Json(json!({ "id": id, "revision": revision }))))
}

async fn fetch(State(store): State<Arc<Store>>, Path(id): Path<String>) -> ApiResult<Json<Value>> {
    let session = store.get(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let session = session.lock();
    let (result, result_revision) = match &session.last_result {
        Some((rev, _, value)) => (value.clone(), Some(*rev)),
        None => (Value::Null, None),
    };
    Ok(Json(json!({
        "id": session.id,
        "revision": session.revision,
        "problem": session.problem,
        "result": result,
        "result_revision": result_revision,
        "stale": result_revision.is_some_and(|r| r != session.revision),
    })))
}

#[derive(Debug, Deserialize)]
struct EntryUpdate {
    i: usize,
    j: usize,
    value: Cell,
    #[serde(default)]
    matrix: usize,
    expected_revision: Option<u64>,
}

fn check_revision(session: &Session, expected: Option<u64>) -> ApiResult<()> {
    match expected {
        Some(rev) if rev != session.revision => Err(ApiError {
            status: StatusCode::CONFLICT,
            body: json!({
                "error": format!("revision {rev} is stale, the problem is at revision {}", session.revision),
                "kind": "conflict",
                "revision": session.revision,
            }),
        }),
        _ => Ok(()),
    }
}

fn bad_request(message: impl Into<String>) -> ApiError {
    ApiError::new(StatusCode::BAD_REQUEST, "bad-request", message)
}

fn check_index(i: usize, j: usize, n: usize) -> ApiResult<()> {
    if i >= n || j >= n {
        return Err(bad_request(format!("index ({i}, {j}) is outside a {n}x{n} matrix")));
    }
    Ok(())
}

async fn set_entry(
    State(store): State<Arc<Store>>,
    Path(id): Path<String>,
    text: String,
) -> ApiResult<Json<Value>> {
    let update: EntryUpdate = body(&text)?;
    let handle = store.get(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let mut session = handle.lock();
    check_revision(&session, update.expected_revision)?;
    let doc = &session.problem;
    let n = doc.order();
    check_index(update.i, update.j, n)?;
    if update.matrix >= doc.matrices.len() {
        return Err(bad_request(format!("there is no matrix {}", update.matrix)));
    }
    let value = AnyScalar::parse(&update.value.text(), doc.scale, doc.backend)?;
    let mirror = if doc.auto_reciprocal && update.i != update.j {
        Some(value.inv()?)
    } else {
        None
    };
    let rows = session.problem.matrices[update.matrix].rows_mut();
    rows[update.i][update.j] = Cell::Text(value.to_string());
    if let Some(m) = mirror {
        rows[update.j][update.i] = Cell::Text(m.to_string());
    }
    let revision = store.bump(&mut session)?;
    Ok(Json(json!({ "revision": revision })))
}

#[derive(Debug, Deserialize)]
struct ConstraintUpdate {
    i: usize,
    j: usize,
    value: Cell,
    expected_revision: Option<u64>,
}

async fn set_constraint(
    State(store): State<Arc<Store>>,
    Path(id): Path<String>,
    text: String,
) -> ApiResult<Json<Value>> {
    let update: ConstraintUpdate = body(&text)?;
    let handle = store.get(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let mut session = handle.lock();
    check_revision(&session, update.expected_revision)?;
    let doc = &session.problem;
    let n = doc.order();
    check_index(update.i, update.j, n)?;
    if doc.matrices.len() > 1 {
        return Err(bad_request(
            "constraints combine with a single comparison matrix only",
        ));
    }
    let value = AnyScalar::parse(&update.value.text(), doc.scale, doc.backend)?;
    let zero = AnyScalar::parse(if doc.scale == crate::SemifieldTag::MaxTimes { "0" } else { "-inf" }, doc.scale, doc.backend)?;
    let constraints = session
        .problem
        .constraints
        .get_or_insert_with(|| crate::io::MatrixInput::Rows(vec![vec![Cell::Text(zero.to_string()); n]; n]));
    constraints.rows_mut()[update.i][update.j] = Cell::Text(value.to_string());
    let revision = store.bump(&mut session)?;
    Ok(Json(json!({ "revision": revision })))
}

#[derive(Debug, Default, Deserialize)]
struct SolveQuery {
    normalize: Option<String>,
}

fn normalize_mode(query: &SolveQuery) -> ApiResult<NormalizeMode> {
    Ok(query.normalize.as_deref().unwrap_or("none").parse()?)
}

fn solve_doc(doc: &ProblemDoc, mode: NormalizeMode) -> ApiResult<Value> {
    let value = crate::with_scalar!(doc.scale, doc.backend, S => {
        let result = doc.to_problem::<S>()?.rate()?;
        if mode == NormalizeMode::SumToOne && doc.scale != crate::SemifieldTag::MaxTimes {
            return Err(Error::usage("sum-to-one normalization is only defined on the multiplicative scale").into());
        }
        result_to_json(&result, mode)
    });
    Ok(value)
}

async fn solve(
    State(store): State<Arc<Store>>,
    Path(id): Path<String>,
    Query(query): Query<SolveQuery>,
) -> ApiResult<Json<Value>> {
    let mode = normalize_mode(&query)?;
    let handle = store.get(&id).ok_or_else(|| ApiError::not_found(&id))?;
    let mut session = handle.lock();
    let revision = session.revision;
    let result = match &session.last_result {
        Some((rev, m, value)) if *rev == revision && *m == mode => value.clone(),
        _ => {
            let value = solve_doc(&session.problem, mode)?;
            session.last_result = Some((revision, mode, value.clone()));
            value
        }
    };
    Ok(Json(json!({
        "id": session.id,
        "revision": revision,
        "stale": false,
        "result": result,
    })))
}

async fn solve_once(Query(query): Query<SolveQuery>, text: String) -> ApiResult<Json<Value>> {
    let mode = normalize_mode(&query)?;
    let doc: ProblemDoc = body(&text)?;
    Ok(Json(json!({ "result": solve_doc(&doc, mode)? })))
}

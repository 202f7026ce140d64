use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::io::ProblemDoc;
use crate::rating::NormalizeMode;

/// A stored problem and the last result computed for it.
#[derive(Debug)]
pub struct Session {
    pub id: String,
    pub problem: ProblemDoc,
    pub revision: u64,
    /// Revision and normalization the cached result was computed with.
    pub last_result: Option<(u64, NormalizeMode, Value)>,
}

#[derive(Serialize, Deserialize)]
struct Persisted {
    id: String,
    revision: u64,
    problem: ProblemDoc,
}

/// In-memory sessions, optionally mirrored to one JSON file per problem.
#[derive(Default)]
pub struct Store {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    dir: Option<PathBuf>,
}

impl Store {
    /// Opens a store, loading `*.json` sessions from `dir` when given.
    pub fn open(dir: Option<PathBuf>) -> Result<Self> {
        let store = Self {
            sessions: RwLock::default(),
            dir,
        };
        let Some(dir) = &store.dir else {
            return Ok(store);
        };
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        let mut sessions = store.sessions.write();
        for entry in entries.flatten() {
            let path = entry.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let saved: Persisted = serde_json::from_str(&text)
                .map_err(|e| Error::parse(e.line(), e.to_string()).in_file(path.display().to_string()))?;
            let session = Session {
                id: saved.id.clone(),
                problem: saved.problem,
                revision: saved.revision,
                last_result: None,
            };
            sessions.insert(saved.id, Arc::new(Mutex::new(session)));
        }
        drop(sessions);
        Ok(store)
    }

    pub fn insert(&self, problem: ProblemDoc) -> Result<(String, u64)> {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let session = Session {
            id: id.clone(),
            problem,
            revision: 0,
            last_result: None,
        };
        self.save(&session)?;
        self.sessions.write().insert(id.clone(), Arc::new(Mutex::new(session)));
        Ok((id, 0))
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.sessions.read().get(id).cloned()
    }

    pub fn len(&self) -> usize {
        self.sessions.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Records a mutation of `session`: bumps and persists the revision.
    pub fn bump(&self, session: &mut Session) -> Result<u64> {
        session.revision += 1;
        self.save(session)?;
        Ok(session.revision)
    }

    fn save(&self, session: &Session) -> Result<()> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let saved = Persisted {
            id: session.id.clone(),
            revision: session.revision,
            problem: session.problem.clone(),
        };
        let path = dir.join(format!("{}.json", session.id));
        let text = serde_json::to_string_pretty(&saved).expect("problem documents serialize");
        std::fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

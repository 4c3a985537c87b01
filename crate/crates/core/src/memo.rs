use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

/// Write-once-per-key table shared between threads.
///
/// The map lock is held only long enough to fetch the per-key slot, so
/// independent keys initialize concurrently while racing initializers of the
/// same key block on one `OnceLock`.
pub(crate) struct Memo<K, V> {
    slots: Mutex<HashMap<K, Arc<OnceLock<V>>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            slots: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_try_init<E>(
        &self,
        key: &K,
        init: impl FnOnce() -> Result<V, E>,
    ) -> Result<V, E> {
        let slot = {
            let mut slots = self.slots.lock().expect("memo lock poisoned");
            slots.entry(key.clone()).or_default().clone()
        };
        if let Some(v) = slot.get() {
            return Ok(v.clone());
        }
        let value = init()?;
        // A concurrent initializer may have won; both values are equal by construction.
        Ok(slot.get_or_init(|| value).clone())
    }
}

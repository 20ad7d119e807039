//! Name-keyed collections of trait objects, selected at runtime.

use crate::error::{Error, Result};

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(&'static str, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    /// `kind` names the entries in lookup errors, e.g. `"suite"`.
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: Vec::new() }
    }

    /// Adds an entry, replacing any earlier one with the same name.
    pub fn register(&mut self, name: &'static str, entry: Box<T>) -> &mut Self {
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = entry,
            None => self.entries.push((name, entry)),
        }
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, e)| e.as_ref())
            .ok_or_else(|| Error::UnknownName { kind: self.kind, name: name.to_string() })
    }

    /// Names in registration order.
    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|(n, _)| *n).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &T)> {
        self.entries.iter().map(|(n, e)| (*n, e.as_ref()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Greet {
        fn hello(&self) -> String;
    }
    struct En;
    struct Fr;
    impl Greet for En {
        fn hello(&self) -> String {
            "hello".into()
        }
    }
    impl Greet for Fr {
        fn hello(&self) -> String {
            "bonjour".into()
        }
    }

    #[test]
    fn lookup_and_replace() {
        let mut r: Registry<dyn Greet> = Registry::new("greeting");
        r.register("en", Box::new(En)).register("fr", Box::new(Fr));
        assert_eq!(r.names(), vec!["en", "fr"]);
        assert_eq!(r.get("fr").unwrap().hello(), "bonjour");
        r.register("en", Box::new(Fr));
        assert_eq!(r.len(), 2);
        assert_eq!(r.get("en").unwrap().hello(), "bonjour");
        assert_eq!(r.get("de").err(), Some(Error::UnknownName { kind: "greeting", name: "de".into() }));
    }
}

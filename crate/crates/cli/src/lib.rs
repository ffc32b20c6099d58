//! Library surface of the okb CLI, shared with its integration tests.

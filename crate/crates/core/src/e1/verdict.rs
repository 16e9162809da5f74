use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        }
    }

    /// Conjunction: fails dominates unknown, which dominates holds.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Holds,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    Direct,
    Cor4,
    Prop3,
    Prop2,
    RestrictionChain,
    SolvableCor3,
    CharSimpleProp1,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "Direct",
            Method::Cor4 => "Cor4",
            Method::Prop3 => "Prop3",
            Method::Prop2 => "Prop2",
            Method::RestrictionChain => "RestrictionChain",
            Method::SolvableCor3 => "SolvableCor3",
            Method::CharSimpleProp1 => "CharSimpleProp1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub method: Method,
    pub data: Value,
}

impl Certificate {
    pub fn new(method: Method, data: Value) -> Self {
        Certificate { method, data }
    }
}

/// An element `g` with `rho(g) n` having eigenvalue one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: usize,
    pub word: String,
    pub perm: String,
}

/// Outcome of one `(chi, nu, sign)` task.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskVerdict {
    pub nu: Vec<String>,
    pub sign: i8,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violator: Option<Violator>,
    pub certificate: Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<Validation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violator {
    pub nu: Vec<String>,
    pub sign: i8,
    /// Number of group elements rescanned to confirm the failure.
    pub scanned: usize,
}

/// Cross-check of all certificate methods against the direct scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub direct: Status,
    pub certificates: Vec<Method>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterVerdict {
    pub index: usize,
    pub degree: usize,
    pub kernel_order: usize,
    pub status: Status,
    pub nu_classes: Vec<TaskVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupVerdict {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<Certificate>,
    pub characters: Vec<CharacterVerdict>,
    pub overall: Status,
}

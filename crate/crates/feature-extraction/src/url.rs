use serde::Serialize;
use thiserror::Error;

/// Decomposed http/https URL, just deep enough for the lexical features.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UrlParts {
    /// Lowercased scheme, `http` or `https`.
    pub scheme: String,
    pub host: String,
    /// True when the host is a dotted-quad IPv4 literal.
    pub host_is_ip: bool,
    /// Effective port: the explicit one, or the scheme default.
    pub port: u16,
    pub explicit_port_given: bool,
    /// Everything after the authority (path, query, fragment).
    pub path_and_query: String,
    /// Character count of the whole input.
    pub raw_length: usize,
}

impl UrlParts {
    pub fn host_dot_count(&self) -> usize {
        self.host.matches('.').count()
    }

    pub fn default_port(&self) -> u16 {
        scheme_default_port(&self.scheme)
    }
}

/// Parse failures, each carrying the byte offset of the offending part.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `://` scheme separator (position 0)")]
    MissingSchemeSeparator,

    #[error("unsupported scheme `{scheme}` (position 0): only http and https are accepted")]
    UnsupportedScheme { scheme: String },

    #[error("empty host (position {position})")]
    EmptyHost { position: usize },

    #[error("malformed port `{text}` (position {position}): expected 1-65535")]
    MalformedPort { text: String, position: usize },

    #[error("userinfo is not supported (`@` at position {position})")]
    UserinfoNotSupported { position: usize },

    #[error("IPv6 hosts are not supported (`[` at position {position})")]
    Ipv6NotSupported { position: usize },
}

pub fn scheme_default_port(scheme: &str) -> u16 {
    match scheme {
        "https" => 443,
        _ => 80,
    }
}

/// Splits an http/https URL into [`UrlParts`].
pub fn parse_url(raw: &str) -> Result<UrlParts, ParseError> {
    let sep = raw
        .find("://")
        .ok_or(ParseError::MissingSchemeSeparator)?;
    let scheme = raw[..sep].to_ascii_lowercase();
    if scheme != "http" && scheme != "https" {
        return Err(ParseError::UnsupportedScheme { scheme });
    }

    let authority_start = sep + 3;
    let rest = &raw[authority_start..];
    let authority_len = rest
        .find(['/', '?', '#'])
        .unwrap_or(rest.len());
    let authority = &rest[..authority_len];
    let path_and_query = rest[authority_len..].to_string();

    if let Some(i) = authority.find('@') {
        return Err(ParseError::UserinfoNotSupported {
            position: authority_start + i,
        });
    }
    if authority.starts_with('[') {
        return Err(ParseError::Ipv6NotSupported {
            position: authority_start,
        });
    }

    let (host, port, explicit_port_given) = match authority.find(':') {
        None => (authority, scheme_default_port(&scheme), false),
        Some(i) => {
            let text = &authority[i + 1..];
            let position = authority_start + i + 1;
            let port = text
                .parse::<u32>()
                .ok()
                .filter(|p| (1..=65535).contains(p) && text.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| ParseError::MalformedPort {
                    text: text.to_string(),
                    position,
                })?;
            (&authority[..i], port as u16, true)
        }
    };
    if host.is_empty() {
        return Err(ParseError::EmptyHost {
            position: authority_start,
        });
    }

    Ok(UrlParts {
        host_is_ip: is_ipv4_literal(host),
        scheme,
        host: host.to_string(),
        port,
        explicit_port_given,
        path_and_query,
        raw_length: raw.chars().count(),
    })
}

/// Exactly four dot-separated decimal octets in 0..=255.
fn is_ipv4_literal(host: &str) -> bool {
    let octets: Vec<&str> = host.split('.').collect();
    octets.len() == 4
        && octets.iter().all(|o| {
            !o.is_empty()
                && o.len() <= 3
                && o.bytes().all(|b| b.is_ascii_digit())
                && o.parse::<u16>().map(|v| v <= 255).unwrap_or(false)
        })
}

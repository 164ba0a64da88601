/** Decoding of the server's escaped pattern strings for display.
 *
 * The API escapes patterns as printable ASCII with backslash doubled and
 * everything else as \xNN. For layout we need real line breaks back while
 * keeping other non-printables visible in their escaped form.
 */

export type PatternToken =
  | { kind: "char"; text: string }
  | { kind: "newline" }
  | { kind: "escaped"; text: string };

export function tokenizePattern(escaped: string): PatternToken[] {
  const tokens: PatternToken[] = [];
  let i = 0;
  while (i < escaped.length) {
    const ch = escaped[i];
    if (ch === "\\") {
      if (escaped[i + 1] === "\\") {
        tokens.push({ kind: "char", text: "\\" });
        i += 2;
      } else if (escaped[i + 1] === "x") {
        const hex = escaped.slice(i + 2, i + 4);
        if (hex.toLowerCase() === "0a") {
          tokens.push({ kind: "newline" });
        } else {
          tokens.push({ kind: "escaped", text: `\\x${hex}` });
        }
        i += 4;
      } else {
        // not a form the server emits; show it rather than drop it
        tokens.push({ kind: "char", text: ch });
        i += 1;
      }
    } else {
      tokens.push({ kind: "char", text: ch });
      i += 1;
    }
  }
  return tokens;
}

/** Split an escaped pattern at newlines into displayable line fragments. */
export function displayFragments(escaped: string): string[] {
  const fragments: string[] = [];
  let current = "";
  for (const token of tokenizePattern(escaped)) {
    if (token.kind === "newline") {
      fragments.push(current);
      current = "";
    } else {
      current += token.text;
    }
  }
  fragments.push(current);
  return fragments;
}

/**
 * JSON parsing that keeps every number's source text.
 *
 * The workbench must show numbers exactly as the service sent them, but
 * JSON.parse -> String() re-formats doubles (e.g. a wire literal
 * "0.80000000000000004" would come back as "0.8000000000000001"). This
 * parser returns numbers as {value, text} pairs so views can render the
 * verbatim wire text while still comparing magnitudes.
 */

export interface RawNumber {
  value: number;
  text: string;
}

export type RawValue =
  | { kind: "null" }
  | { kind: "bool"; value: boolean }
  | { kind: "number"; value: number; text: string }
  | { kind: "string"; value: string }
  | { kind: "array"; items: RawValue[] }
  | { kind: "object"; entries: Map<string, RawValue> };

export class RawJsonError extends Error {
  constructor(message: string, readonly position: number) {
    super(`${message} at position ${position}`);
  }
}

const WHITESPACE = new Set([" ", "\t", "\n", "\r"]);

class Parser {
  private pos = 0;

  constructor(private readonly text: string) {}

  parse(): RawValue {
    const value = this.parseValue();
    this.skipWhitespace();
    if (this.pos !== this.text.length) {
      throw new RawJsonError("trailing content", this.pos);
    }
    return value;
  }

  private peek(): string {
    const ch = this.text[this.pos];
    if (ch === undefined) {
      throw new RawJsonError("unexpected end of input", this.pos);
    }
    return ch;
  }

  private skipWhitespace(): void {
    while (this.pos < this.text.length && WHITESPACE.has(this.text[this.pos]!)) {
      this.pos += 1;
    }
  }

  private expect(ch: string): void {
    if (this.peek() !== ch) {
      throw new RawJsonError(`expected ${JSON.stringify(ch)}`, this.pos);
    }
    this.pos += 1;
  }

  private parseValue(): RawValue {
    this.skipWhitespace();
    const ch = this.peek();
    if (ch === "{") return this.parseObject();
    if (ch === "[") return this.parseArray();
    if (ch === '"') return { kind: "string", value: this.parseString() };
    if (ch === "t" || ch === "f") return this.parseBool();
    if (ch === "n") {
      this.literal("null");
      return { kind: "null" };
    }
    return this.parseNumber();
  }

  private literal(word: string): void {
    if (this.text.slice(this.pos, this.pos + word.length) !== word) {
      throw new RawJsonError(`expected ${word}`, this.pos);
    }
    this.pos += word.length;
  }

  private parseBool(): RawValue {
    if (this.peek() === "t") {
      this.literal("true");
      return { kind: "bool", value: true };
    }
    this.literal("false");
    return { kind: "bool", value: false };
  }

  private parseNumber(): RawValue {
    const start = this.pos;
    const rest = this.text.slice(start);
    const match = /^-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?/.exec(rest);
    if (!match || match[0].length === 0) {
      throw new RawJsonError("invalid number", start);
    }
    const text = match[0];
    this.pos += text.length;
    return { kind: "number", value: Number(text), text };
  }

  private parseString(): string {
    this.expect('"');
    let out = "";
    for (;;) {
      const ch = this.peek();
      this.pos += 1;
      if (ch === '"') return out;
      if (ch === "\\") {
        const esc = this.peek();
        this.pos += 1;
        switch (esc) {
          case '"':
          case "\\":
          case "/":
            out += esc;
            break;
          case "b":
            out += "\b";
            break;
          case "f":
            out += "\f";
            break;
          case "n":
            out += "\n";
            break;
          case "r":
            out += "\r";
            break;
          case "t":
            out += "\t";
            break;
          case "u": {
            const hex = this.text.slice(this.pos, this.pos + 4);
            if (!/^[0-9a-fA-F]{4}$/.test(hex)) {
              throw new RawJsonError("invalid unicode escape", this.pos);
            }
            out += String.fromCharCode(parseInt(hex, 16));
            this.pos += 4;
            break;
          }
          default:
            throw new RawJsonError("invalid escape", this.pos - 1);
        }
      } else {
        out += ch;
      }
    }
  }

  private parseArray(): RawValue {
    this.expect("[");
    const items: RawValue[] = [];
    this.skipWhitespace();
    if (this.peek() === "]") {
      this.pos += 1;
      return { kind: "array", items };
    }
    for (;;) {
      items.push(this.parseValue());
      this.skipWhitespace();
      const ch = this.peek();
      this.pos += 1;
      if (ch === "]") return { kind: "array", items };
      if (ch !== ",") throw new RawJsonError("expected , or ]", this.pos - 1);
    }
  }

  private parseObject(): RawValue {
    this.expect("{");
    const entries = new Map<string, RawValue>();
    this.skipWhitespace();
    if (this.peek() === "}") {
      this.pos += 1;
      return { kind: "object", entries };
    }
    for (;;) {
      this.skipWhitespace();
      const key = this.parseString();
      this.skipWhitespace();
      this.expect(":");
      entries.set(key, this.parseValue());
      this.skipWhitespace();
      const ch = this.peek();
      this.pos += 1;
      if (ch === "}") return { kind: "object", entries };
      if (ch !== ",") throw new RawJsonError("expected , or }", this.pos - 1);
    }
  }
}

export function parseRaw(text: string): RawValue {
  return new Parser(text).parse();
}

// -- view helpers -----------------------------------------------------------

export function asObject(value: RawValue, what = "value"): Map<string, RawValue> {
  if (value.kind !== "object") throw new Error(`${what} is not an object`);
  return value.entries;
}

export function asArray(value: RawValue, what = "value"): RawValue[] {
  if (value.kind !== "array") throw new Error(`${what} is not an array`);
  return value.items;
}

export function asString(value: RawValue, what = "value"): string {
  if (value.kind !== "string") throw new Error(`${what} is not a string`);
  return value.value;
}

export function asNumber(value: RawValue, what = "value"): RawNumber {
  if (value.kind !== "number") throw new Error(`${what} is not a number`);
  return { value: value.value, text: value.text };
}

export function numberOrNull(value: RawValue, what = "value"): RawNumber | null {
  if (value.kind === "null") return null;
  return asNumber(value, what);
}

export function get(value: RawValue, key: string): RawValue {
  const found = asObject(value).get(key);
  if (found === undefined) throw new Error(`missing key ${JSON.stringify(key)}`);
  return found;
}

/**
 * Canonical JSON text: sorted keys, two-space indent, trailing newline.
 *
 * Exported chart specs must be byte-identical to the ones the CLI's
 * render command writes, so this mirrors that serializer exactly. The
 * number dialect is JavaScript's own `String(Number)` (shortest
 * round-trip digits, "4" not "4.0", decimal notation between 1e-6 and
 * 1e21), which is native here. String escaping matches too: both sides
 * escape only the JSON-mandated characters and keep non-ASCII text raw.
 */

export type JsonValue =
  | null
  | boolean
  | number
  | string
  | JsonValue[]
  | { [key: string]: JsonValue };

export function formatNumber(value: number): string {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new Error(`non-finite number ${value} has no JSON form`);
  }
  return String(value); // covers -0 as "0"
}

function write(value: JsonValue, indent: number, out: string[]): void {
  const pad = "  ".repeat(indent);
  const inner = "  ".repeat(indent + 1);
  if (value === null) {
    out.push("null");
    return;
  }
  if (typeof value === "boolean") {
    out.push(value ? "true" : "false");
    return;
  }
  if (typeof value === "number") {
    out.push(formatNumber(value));
    return;
  }
  if (typeof value === "string") {
    out.push(JSON.stringify(value));
    return;
  }
  if (Array.isArray(value)) {
    if (value.length === 0) {
      out.push("[]");
      return;
    }
    out.push("[\n");
    value.forEach((item, position) => {
      out.push(inner);
      write(item, indent + 1, out);
      out.push(position < value.length - 1 ? ",\n" : "\n");
    });
    out.push(pad + "]");
    return;
  }
  if (typeof value === "object") {
    // default sort compares UTF-16 code units; all spec keys are ASCII,
    // where that equals the code-point order the other serializer uses
    const keys = Object.keys(value).sort();
    if (keys.length === 0) {
      out.push("{}");
      return;
    }
    out.push("{\n");
    keys.forEach((key, position) => {
      out.push(inner + JSON.stringify(key) + ": ");
      write(value[key] as JsonValue, indent + 1, out);
      out.push(position < keys.length - 1 ? ",\n" : "\n");
    });
    out.push(pad + "}");
    return;
  }
  throw new Error(`${typeof value} is not JSON-serializable`);
}

/** Serialize to the canonical text form (ends with a newline). */
export function toCanonicalJson(value: JsonValue): string {
  const out: string[] = [];
  write(value, 0, out);
  out.push("\n");
  return out.join("");
}

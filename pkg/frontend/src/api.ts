/**
 * Typed client for the graph service.
 *
 * Every payload is parsed with the literal-preserving JSON reader so views
 * can display wire text verbatim. The contest call streams solver progress
 * via text/event-stream and resolves with the single terminal outcome.
 */

import {
  RawNumber,
  RawValue,
  asArray,
  asNumber,
  asObject,
  asString,
  get,
  numberOrNull,
  parseRaw,
} from "./rawjson.js";
import { SseParser } from "./sse.js";

export type SemanticsKind = "dfquad" | "qe" | "reb" | "mlp";
export const SEMANTICS_KINDS: SemanticsKind[] = ["dfquad", "qe", "reb", "mlp"];

export type Polarity = "attack" | "support";

export interface ArgumentView {
  id: string;
  baseScore: RawNumber;
}

export interface EdgeView {
  source: string;
  target: string;
  polarity: Polarity;
  weight: RawNumber;
}

export interface QbafView {
  arguments: ArgumentView[];
  edges: EdgeView[];
}

export interface StrengthsView {
  semantics: string;
  strengths: Map<string, RawNumber | null>;
}

export interface GraeRowView {
  source: string;
  target: string;
  polarity: Polarity;
  weight: RawNumber;
  score: RawNumber;
}

export interface GraesView {
  semantics: string;
  topic: string;
  method: string;
  scores: GraeRowView[];
}

export interface IntervalView {
  semantics: string;
  topic: string;
  min: RawNumber;
  max: RawNumber;
}

export interface OutcomeWeightView {
  source: string;
  target: string;
  weight: RawNumber;
}

export interface OutcomeView {
  semantics: string;
  status: string;
  finalStrength: RawNumber;
  iterationsUsed: number;
  attemptsUsed: number;
  weights: OutcomeWeightView[];
}

export type ContestResult =
  | { kind: "outcome"; outcome: OutcomeView }
  | { kind: "unattainable"; interval: IntervalView };

export interface ContestProgress {
  iteration: number;
  strength: RawNumber;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

function jsonString(s: string): string {
  return JSON.stringify(s);
}

function parseQbafView(value: RawValue): QbafView {
  return {
    arguments: asArray(get(value, "arguments"), "arguments").map((item) => ({
      id: asString(get(item, "id")),
      baseScore: asNumber(get(item, "base_score")),
    })),
    edges: asArray(get(value, "edges"), "edges").map((item) => ({
      source: asString(get(item, "source")),
      target: asString(get(item, "target")),
      polarity: asString(get(item, "polarity")) as Polarity,
      weight: asNumber(get(item, "weight")),
    })),
  };
}

function parseIntervalView(value: RawValue): IntervalView {
  return {
    semantics: asString(get(value, "semantics")),
    topic: asString(get(value, "topic")),
    min: asNumber(get(value, "min")),
    max: asNumber(get(value, "max")),
  };
}

function parseOutcomeView(value: RawValue): OutcomeView {
  return {
    semantics: asString(get(value, "semantics")),
    status: asString(get(value, "status")),
    finalStrength: asNumber(get(value, "final_strength")),
    iterationsUsed: asNumber(get(value, "iterations_used")).value,
    attemptsUsed: asNumber(get(value, "attempts_used")).value,
    weights: asArray(get(value, "weights"), "weights").map((item) => ({
      source: asString(get(item, "source")),
      target: asString(get(item, "target")),
      weight: asNumber(get(item, "weight")),
    })),
  };
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = parseRaw(await response.text());
    return asString(get(body, "error"));
  } catch {
    return `request failed with status ${response.status}`;
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchLike: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchLike(this.baseUrl + path, init);
    return response;
  }

  private async requestOk(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.request(path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    return response;
  }

  async createQbaf(document: string): Promise<string> {
    const response = await this.requestOk("/qbafs", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: document,
    });
    return asString(get(parseRaw(await response.text()), "id"));
  }

  async getQbaf(id: string): Promise<QbafView> {
    const response = await this.requestOk(`/qbafs/${id}`);
    return parseQbafView(parseRaw(await response.text()));
  }

  async strengths(id: string, semantics: SemanticsKind): Promise<StrengthsView> {
    const response = await this.requestOk(`/qbafs/${id}/strengths?semantics=${semantics}`);
    const body = parseRaw(await response.text());
    const strengths = new Map<string, RawNumber | null>();
    for (const [key, value] of asObject(get(body, "strengths"))) {
      strengths.set(key, numberOrNull(value, key));
    }
    return { semantics: asString(get(body, "semantics")), strengths };
  }

  async graes(id: string, topic: string, semantics: SemanticsKind): Promise<GraesView> {
    const response = await this.requestOk(
      `/qbafs/${id}/graes?topic=${encodeURIComponent(topic)}&semantics=${semantics}`,
    );
    const body = parseRaw(await response.text());
    return {
      semantics: asString(get(body, "semantics")),
      topic: asString(get(body, "topic")),
      method: asString(get(body, "method")),
      scores: asArray(get(body, "scores"), "scores").map((item) => ({
        source: asString(get(item, "source")),
        target: asString(get(item, "target")),
        polarity: asString(get(item, "polarity")) as Polarity,
        weight: asNumber(get(item, "weight")),
        score: asNumber(get(item, "score")),
      })),
    };
  }

  async attainability(id: string, topic: string, semantics: SemanticsKind): Promise<IntervalView> {
    const response = await this.requestOk(
      `/qbafs/${id}/attainability?topic=${encodeURIComponent(topic)}&semantics=${semantics}`,
    );
    return parseIntervalView(parseRaw(await response.text()));
  }

  /**
   * Run the solver. ``desiredStrength`` is the slider's literal text and is
   * spliced into the request body verbatim so the service receives exactly
   * what the user saw.
   */
  async contest(
    id: string,
    topic: string,
    desiredStrength: string,
    semantics: SemanticsKind,
    seed: number,
    onProgress: (progress: ContestProgress) => void,
  ): Promise<ContestResult> {
    const body =
      `{"topic":${jsonString(topic)},"desired_strength":${desiredStrength},` +
      `"semantics":${jsonString(semantics)},"seed":${seed}}`;
    const response = await this.request(`/qbafs/${id}/contest`, {
      method: "POST",
      headers: { "content-type": "application/json", accept: "text/event-stream" },
      body,
    });
    if (response.status === 422) {
      const payload = parseRaw(await response.text());
      return { kind: "unattainable", interval: parseIntervalView(get(payload, "attainability")) };
    }
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }

    const parser = new SseParser();
    let outcome: OutcomeView | null = null;
    const handle = (eventName: string, data: string) => {
      const payload = parseRaw(data);
      if (eventName === "progress") {
        onProgress({
          iteration: asNumber(get(payload, "iteration")).value,
          strength: asNumber(get(payload, "strength")),
        });
      } else if (eventName === "outcome") {
        if (asString(get(payload, "status")) === "error") {
          throw new ApiError(500, asString(get(payload, "error")));
        }
        outcome = parseOutcomeView(payload);
      }
    };

    if (response.body) {
      const reader = response.body.getReader();
      const decoder = new TextDecoder();
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        for (const event of parser.feed(decoder.decode(value, { stream: true }))) {
          handle(event.event, event.data);
        }
      }
    } else {
      for (const event of parser.feed(await response.text())) {
        handle(event.event, event.data);
      }
    }
    for (const event of parser.finish()) {
      handle(event.event, event.data);
    }
    if (!outcome) {
      throw new ApiError(502, "stream ended without an outcome event");
    }
    return { kind: "outcome", outcome };
  }

  /** Replace the stored weights; weight literals are sent verbatim. */
  async putWeights(id: string, weights: OutcomeWeightView[]): Promise<QbafView> {
    const items = weights.map(
      (w) =>
        `{"source":${jsonString(w.source)},"target":${jsonString(w.target)},"weight":${w.weight.text}}`,
    );
    const response = await this.requestOk(`/qbafs/${id}/weights`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: `{"weights":[${items.join(",")}]}`,
    });
    return parseQbafView(parseRaw(await response.text()));
  }
}

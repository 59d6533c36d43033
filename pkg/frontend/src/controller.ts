import { Debouncer } from "./debounce.js";
import type {
  Api,
  CandidateInfo,
  ScoreResponse,
  Span,
  SuggestionResponse,
} from "./types.js";

export interface PopupState {
  span: Span;
  suggestions: SuggestionResponse;
  /** span score, shown for multi-token selections */
  spanScore: number | null;
}

export interface EditorState {
  text: string;
  /** most recent completed score response, never a stale one */
  score: ScoreResponse | null;
  pending: boolean;
  /** network failure: annotations may lag the text */
  stale: boolean;
  /** after a local splice, hovers are blocked until fresh annotations land */
  locked: boolean;
  popup: PopupState | null;
  feedbackNotice: string | null;
}

/** Replace the UTF-8 byte range [byteStart, byteEnd) of `text`. */
export function spliceBytes(
  text: string,
  byteStart: number,
  byteEnd: number,
  replacement: string
): string {
  const bytes = new TextEncoder().encode(text);
  const decoder = new TextDecoder();
  const prefix = decoder.decode(bytes.slice(0, byteStart));
  const suffix = decoder.decode(bytes.slice(byteEnd));
  if (replacement === "") {
    // collapse the space run at the junction, as the server does
    return (prefix.replace(/ +$/, "") + " " + suffix.replace(/^ +/, ""))
      .replace(/^ +| +$/g, "");
  }
  return prefix + replacement + suffix;
}

export class EditorController {
  readonly state: EditorState = {
    text: "",
    score: null,
    pending: false,
    stale: false,
    locked: false,
    popup: null,
    feedbackNotice: null,
  };

  /** sequence number of the latest issued score request */
  private issuedSeq = 0;
  /** sequence number of the response currently rendered */
  private renderedSeq = 0;
  private popupFetchSeq = 0;
  private readonly debouncer: Debouncer;
  private readonly listeners: Array<() => void> = [];

  constructor(private readonly api: Api, debounceMs = 300) {
    this.debouncer = new Debouncer(debounceMs);
  }

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  /** Text changed in the editor; score after the burst goes idle. */
  onEdit(text: string): void {
    this.state.text = text;
    this.state.popup = null;
    this.state.locked = true;
    this.notify();
    this.debouncer.schedule(() => void this.refresh());
  }

  /** Issue a score request immediately (used after picking a candidate). */
  async refresh(): Promise<void> {
    const seq = ++this.issuedSeq;
    const text = this.state.text;
    this.state.pending = true;
    this.notify();
    try {
      const response = await this.api.score(text);
      if (seq <= this.renderedSeq || seq < this.issuedSeq) {
        return; // out-of-order or superseded: never render stale annotations
      }
      this.renderedSeq = seq;
      this.state.score = response;
      this.state.stale = false;
      this.state.locked = false;
    } catch {
      if (seq === this.issuedSeq) {
        this.state.stale = true;
      }
    } finally {
      if (seq === this.issuedSeq) {
        this.state.pending = false;
      }
      this.notify();
    }
  }

  /** Hover over a highlighted token: fetch its single-token suggestions. */
  async onHover(tokenIndex: number): Promise<void> {
    const score = this.state.score;
    if (this.state.locked || !score) return;
    const token = score.tokens[tokenIndex];
    if (!token || !token.highlighted) return;
    await this.openPopup({ start_token: tokenIndex, end_token: tokenIndex + 1 }, false);
  }

  /** Selection of a contiguous span: popup with tuple suggestions + span score. */
  async onSelect(span: Span): Promise<void> {
    if (this.state.locked || !this.state.score) return;
    if (span.end_token - span.start_token < 1) return;
    await this.openPopup(span, span.end_token - span.start_token > 1);
  }

  private async openPopup(span: Span, withSpanScore: boolean): Promise<void> {
    const fetchSeq = ++this.popupFetchSeq;
    const text = this.state.text;
    try {
      const [suggestions, spanScore] = await Promise.all([
        this.api.alternatives(text, span),
        withSpanScore ? this.api.scoreSpan(text, span) : Promise.resolve(null),
      ]);
      if (fetchSeq !== this.popupFetchSeq || text !== this.state.text) {
        return; // hover moved on or text changed while fetching
      }
      if (suggestions.candidates.length === 0 && !withSpanScore) {
        this.state.popup = null; // nothing to offer: no popup
      } else {
        this.state.popup = {
          span,
          suggestions,
          spanScore: spanScore ? spanScore.score_0_100 : null,
        };
      }
    } catch {
      if (fetchSeq === this.popupFetchSeq) this.state.popup = null;
    }
    this.notify();
  }

  closePopup(): void {
    this.popupFetchSeq++; // cancels any in-flight suggestion fetch
    this.state.popup = null;
    this.notify();
  }

  /** Apply a candidate: splice locally, then refresh the annotations. */
  async onPick(candidate: CandidateInfo): Promise<void> {
    const popup = this.state.popup;
    const score = this.state.score;
    if (!popup || !score) return;
    const first = score.tokens[popup.span.start_token];
    const last = score.tokens[popup.span.end_token - 1];
    if (!first || !last) return;
    this.state.text = spliceBytes(
      this.state.text,
      first.byte_start,
      last.byte_end,
      candidate.replacement
    );
    this.state.popup = null;
    this.state.locked = true;
    this.debouncer.cancel();
    this.notify();
    await this.refresh();
  }

  async submitFeedback(comment: string): Promise<boolean> {
    if (comment.trim() === "") {
      this.state.feedbackNotice = "Please enter a comment first.";
      this.notify();
      return false;
    }
    try {
      await this.api.feedback(this.state.text, comment);
      this.state.feedbackNotice = "Thanks, your feedback was recorded.";
      this.notify();
      return true;
    } catch {
      this.state.feedbackNotice = "Could not submit feedback; your comment is preserved.";
      this.notify();
      return false;
    }
  }
}
